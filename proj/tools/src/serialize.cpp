#include "serialize.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "flc/error.hpp"

namespace flc::cli {

namespace {

json count_or_null(const std::optional<QuadraticScalar>& s) { return s ? to_json(*s) : json(nullptr); }

json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

int field_d(const std::vector<GroupElement>& pts) {
  for (const auto& p : pts) {
    for (const auto& c : p.coords()) {
      if (c.d() != 0) return c.d();
    }
  }
  return 0;
}

}  // namespace

json to_json(const QuadraticScalar& s) { return s.to_string(); }

json to_json(const GroupElement& g) {
  json a = json::array();
  for (const auto& c : g.coords()) a.push_back(to_json(c));
  return a;
}

json to_json(const Window& w) {
  json lo = json::array(), hi = json::array();
  for (const auto& v : w.lo) lo.push_back(to_json(v));
  for (const auto& v : w.hi) hi.push_back(to_json(v));
  return {{"lo", lo}, {"hi", hi}, {"open", w.open}, {"symmetrized", w.symmetrized}};
}

json to_json(const Region& r) {
  json a = json::array();
  for (const auto& b : r.boxes) a.push_back(to_json(b));
  return a;
}

json to_json(const std::vector<GroupElement>& pts) {
  json a = json::array();
  for (const auto& p : pts) a.push_back(to_json(p));
  return a;
}

json to_json(const PointSetDescriptor& d) {
  json j{{"label", d.label()}, {"group", to_string(d.kind())}};
  if (d.is_lattice()) {
    j["type"] = "lattice";
    j["basis"] = to_json(d.lattice_data().basis);
    j["offsets"] = to_json(d.lattice_data().offsets);
    return j;
  }
  const auto& m = d.model_set_data();
  auto matrix = [](const CoordinateMatrix& cm) {
    json rows = json::array();
    for (const auto& row : cm) {
      json r = json::array();
      for (const auto& v : row) r.push_back(to_json(v));
      rows.push_back(r);
    }
    return rows;
  };
  j["type"] = "model_set";
  j["phys_map"] = matrix(m.phys_map);
  j["int_map"] = matrix(m.int_map);
  j["internal_group"] = to_string(m.internal_kind);
  j["window"] = to_json(m.window);
  return j;
}

json to_json(const Patch& p) { return {{"radius", to_json(p.radius())}, {"points", to_json(p.points())}}; }

json to_json(const PatchCatalog& c) {
  json classes = json::array();
  for (std::size_t i = 0; i < c.size(); ++i) {
    classes.push_back({{"index", i},
                       {"points", to_json(c.classes[i].points())},
                       {"multiplicity", c.multiplicity[i]},
                       {"anchor", to_json(c.anchors[i])}});
  }
  return {{"radius", to_json(c.radius)}, {"sample", to_json(c.sample_window)}, {"count", c.size()}, {"classes", classes}};
}

json to_json(const UdVerdict& v) {
  json j{{"pass", v.pass}, {"u", to_json(v.u)}, {"sample", to_json(v.sample)}, {"anchors_checked", v.anchors_checked}};
  if (v.counterexample) {
    j["counterexample"] = {{"anchor", to_json(v.counterexample->anchor)},
                           {"first", to_json(v.counterexample->first)},
                           {"second", to_json(v.counterexample->second)}};
  } else {
    j["counterexample"] = nullptr;
  }
  return j;
}

json to_json(const FlcVerdict& v) {
  return {{"pass", v.pass},
          {"u", to_json(v.u)},
          {"carrier_identity_gap", to_json(v.carrier_identity_gap)},
          {"carrier_u", to_json(v.carrier_u)},
          {"carrier_separation", to_json(v.carrier_separation)},
          {"point_set", to_json(v.point_set)},
          {"carrier", to_json(v.carrier)},
          {"translate_closure", v.translate_closure},
          {"closure_radius", to_json(v.closure_radius)},
          {"closure_violation", v.closure_violation ? to_json(*v.closure_violation) : json(nullptr)}};
}

json to_json(const RefinementMap& m) {
  return {{"source_radius", to_json(m.source_radius)}, {"target_radius", to_json(m.target_radius)}, {"assignment", m.assignment}};
}

json to_json(const ClopenClassId& c) { return {{"k", to_json(c.k)}, {"representative", to_json(c.representative)}}; }

json to_json(const SeparationWitness& w) {
  return {{"k", to_json(w.k)},
          {"x", to_json(w.x)},
          {"swapped", w.swapped},
          {"class_p", to_json(w.class_p.representative)},
          {"class_q", to_json(w.class_q.representative)}};
}

json to_json(const ConvergenceVerdict& v) {
  json matches = json::array(), failures = json::array();
  for (const auto& m : v.matches) {
    matches.push_back({{"limit_point", to_json(m.limit_point)}, {"sample_point", to_json(m.sample_point)}, {"distance", m.distance}});
  }
  for (const auto& f : v.failures) {
    failures.push_back({{"condition", f.condition}, {"point", to_json(f.point)}, {"distance", finite_or_null(f.distance < 0 ? NAN : f.distance)}});
  }
  return {{"pass", v.pass},
          {"condition1", v.condition1},
          {"condition2", v.condition2},
          {"radius", to_json(v.radius)},
          {"tol", v.tol},
          {"matches", matches},
          {"failures", failures}};
}

json to_json(const Arrow& a) { return {{"x", to_json(a.x())}, {"budget", to_json(a.budget())}, {"src", to_json(a.src())}}; }

json to_json(const AxiomReport& r) {
  return {{"pairs", r.pairs},
          {"triples", r.triples},
          {"verified",
           {{"range_source", r.range_source},
            {"associativity", r.associativity},
            {"double_inverse", r.double_inverse},
            {"unit_laws", r.unit_laws},
            {"products", r.products},
            {"total", r.verified()}}},
          {"skipped_unknown", r.skipped_unknown},
          {"violations", r.violations},
          {"findings", r.findings}};
}

json to_json(const BisectionSurvey& s) {
  return {{"samples", s.samples},
          {"arrows", s.arrows},
          {"source_violations", s.source_violations},
          {"range_violations", s.range_violations},
          {"findings", s.findings},
          {"pass", s.pass}};
}

json to_json(const PsdCertificate& c) {
  return {{"diagonal", c.diagonal},
          {"symmetric", c.symmetric},
          {"transitive", c.transitive},
          {"blocks", c.blocks},
          {"blocks_all_ones", c.blocks_all_ones},
          {"cross_blocks_zero", c.cross_blocks_zero},
          {"exact_psd", c.exact_psd},
          {"min_eigenvalue", finite_or_null(c.min_eigenvalue)},
          {"float_psd", c.float_psd},
          {"pass", c.pass},
          {"counterexample", c.counterexample}};
}

json to_json(const ProperSupportVerdict& v) {
  return {{"c", to_json(v.c)},
          {"pairs", v.pairs},
          {"supported", v.supported},
          {"inside", v.inside},
          {"outside", v.outside},
          {"violations", v.violations},
          {"findings", v.findings},
          {"pass", v.pass}};
}

json to_json(const XDiscreteness& v) {
  return {{"k", to_json(v.k)},
          {"points", v.points},
          {"min_sep", count_or_null(v.min_sep)},
          {"min_pairwise_separation", count_or_null(v.min_pairwise_separation)},
          {"covered", v.covered},
          {"cover_bound", v.cover_bound},
          {"covering", v.covering},
          {"pass", v.pass}};
}

json to_json(const InnerAmenabilityReport& r) {
  const auto& p = r.params;
  return {{"descriptor", r.descriptor},
          {"parameters",
           {{"radius", to_json(p.radius)},
            {"arrow_radius", to_json(p.arrow_radius)},
            {"sample", to_json(p.sample)},
            {"k", to_json(p.k)},
            {"eps", p.eps},
            {"samples", p.samples},
            {"support_pairs", p.support_pairs},
            {"max_n", p.max_n}}},
          {"seed", p.seed},
          {"catalog_classes", r.catalog_classes},
          {"arrows", r.arrows},
          {"sub_verdicts",
           {{"diagonal", {{"checked", r.diagonal_checked}, {"violations", r.diagonal_violations}, {"pass", r.diagonal_violations == 0}}},
            {"proper_support", to_json(r.proper_support)},
            {"positive_type",
             {{"n", r.positive_type_n},
              {"failures", r.positive_type_failures},
              {"min_eigenvalue", finite_or_null(r.positive_type_min_eigenvalue)}}},
            {"x_discreteness", to_json(r.x_discreteness)}}},
          {"pass", r.pass}};
}

std::string points_csv(const std::vector<GroupElement>& pts) {
  std::ostringstream out;
  const std::size_t dim = pts.empty() ? 0 : pts.front().dim();
  for (std::size_t i = 0; i < dim; ++i) out << "x" << i << "_p,x" << i << "_q,";
  out << "d";
  for (std::size_t i = 0; i < dim; ++i) out << ",x" << i;
  out << "\n";
  const int d = field_d(pts);
  for (const auto& p : pts) {
    for (const auto& c : p.coords()) out << c.p().get_str() << "," << c.q().get_str() << ",";
    out << d;
    char buf[40];
    for (const auto& c : p.coords()) {
      std::snprintf(buf, sizeof buf, ",%.17g", c.to_double());
      out << buf;
    }
    out << "\n";
  }
  return out.str();
}

std::string points_svg(const std::vector<GroupElement>& pts, const Window& view, const std::string& title) {
  const std::size_t dim = view.dim();
  if (dim == 0 || dim > 2) throw DomainError("SVG scatter supports 1D and 2D point sets only");
  const double w = 600, h = dim == 1 ? 120 : 600, pad = 30;
  const double x0 = view.lo[0].to_double(), x1 = view.hi[0].to_double();
  const double y0 = dim == 2 ? view.lo[1].to_double() : 0.0, y1 = dim == 2 ? view.hi[1].to_double() : 1.0;
  auto sx = [&](double x) { return pad + (x1 > x0 ? (x - x0) / (x1 - x0) : 0.5) * (w - 2 * pad); };
  auto sy = [&](double y) { return h - pad - (y1 > y0 ? (y - y0) / (y1 - y0) : 0.5) * (h - 2 * pad); };
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\" viewBox=\"0 0 " << w
      << " " << h << "\">\n";
  out << "<title>" << title << "</title>\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (dim == 1) {
    out << "<line x1=\"" << pad << "\" y1=\"" << h / 2 << "\" x2=\"" << w - pad << "\" y2=\"" << h / 2
        << "\" stroke=\"#999\"/>\n";
  }
  for (const auto& p : pts) {
    const double cx = sx(p[0].to_double());
    const double cy = dim == 1 ? h / 2 : sy(p[1].to_double());
    out << "<circle cx=\"" << fixed(cx) << "\" cy=\"" << fixed(cy) << "\" r=\"3\" fill=\"black\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace flc::cli
