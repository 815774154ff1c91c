#include "commands.hpp"

#include <map>
#include <random>
#include <set>

#include "flc/error.hpp"
#include "serialize.hpp"

namespace flc::cli {

namespace {

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json header(const RunConfig& c, const std::string& command) {
  return {{"command", command}, {"descriptor", to_json(c.descriptor)}, {"parameters", parameters_json(c)}, {"seed", c.seed}};
}

Window scaled(const Window& w, long factor) {
  Window out = w;
  for (auto& v : out.lo) v *= QuadraticScalar(factor);
  for (auto& v : out.hi) v *= QuadraticScalar(factor);
  return out;
}

json ud_suite(const RunConfig& c) { return to_json(check_uniformly_discrete(c.descriptor, c.u, c.sample)); }

json flc_suite(const RunConfig& c) { return to_json(check_flc(c.descriptor, c.sample)); }

json patches_suite(const RunConfig& c) {
  const PatchCatalog cat = enumerate_patches(c.descriptor, c.radius, c.sample);
  const Window wide = scaled(c.sample, 2);
  const PatchCatalog cat2 = enumerate_patches(c.descriptor, c.radius, wide);
  const bool stable = cat.classes == cat2.classes;
  return {{"radius", to_json(c.radius)},
          {"sample", to_json(c.sample)},
          {"count", cat.size()},
          {"doubled_sample", to_json(wide)},
          {"doubled_count", cat2.size()},
          {"stable", stable},
          {"pass", stable}};
}

json separation_check(const Patch& p, const Patch& q, const SeparationWitness& w) {
  const QuadraticScalar c = min(p.radius(), q.radius());
  const Patch& a = w.swapped ? q : p;
  const Patch& b = w.swapped ? p : q;
  const Patch ra = restrict_patch(a, c);
  std::vector<GroupElement> hit;
  for (const auto& g : ra.points()) {
    if (w.k.contains(g)) hit.push_back(g);
  }
  std::vector<GroupElement> expected{ra.identity(), w.x};
  std::sort(expected.begin(), expected.end());
  const bool exact = hit == expected && !w.k.contains(group_inv(w.x)) &&
                     classify_clopen(ra, w.k) != classify_clopen(restrict_patch(b, c), w.k);
  json j = to_json(w);
  j["verified"] = exact;
  return j;
}

json hull_suite(const RunConfig& c) {
  std::vector<PatchCatalog> cats;
  for (const auto& r : c.hull_radii) cats.push_back(enumerate_patches(c.descriptor, r, c.sample));
  json j;
  bool pass = true;

  // Refinement maps down the radius ladder, and functoriality against the direct map.
  json maps = json::array();
  bool functorial = true;
  try {
    std::vector<RefinementMap> steps;
    for (std::size_t i = cats.size(); i-- > 1;) {
      steps.push_back(build_refinement(cats[i], cats[i - 1]));
      maps.push_back(to_json(steps.back()));
    }
    if (steps.size() >= 2) {
      RefinementMap chain = steps.front();
      for (std::size_t i = 1; i < steps.size(); ++i) chain = compose_refinements(chain, steps[i]);
      functorial = chain.assignment == build_refinement(cats.back(), cats.front()).assignment;
    }
    j["refinement"] = {{"maps", maps}, {"functorial", functorial}, {"error", nullptr}};
  } catch (const BudgetError& e) {
    functorial = false;
    j["refinement"] = {{"maps", maps}, {"functorial", false}, {"error", e.what()}};
  }
  pass = pass && functorial;

  // Clopen partition of the top catalog over K = B_{smallest radius}.
  const PatchCatalog& top = cats.back();
  const Region k(Window::ball(c.descriptor.dim(), c.hull_radii.front()));
  std::map<std::vector<GroupElement>, std::vector<std::size_t>> groups;
  bool compatible = true;
  for (std::size_t i = 0; i < top.size(); ++i) {
    const ClopenClassId id = classify_clopen(top.classes[i], k);
    groups[id.representative].push_back(i);
    if (cats.size() >= 2 && classify_clopen(restrict_patch(top.classes[i], cats[cats.size() - 2].radius), k) != id) {
      compatible = false;
    }
  }
  std::size_t members = 0;
  std::set<std::size_t> seen;
  json parts = json::array();
  for (const auto& [rep, idx] : groups) {
    members += idx.size();
    seen.insert(idx.begin(), idx.end());
    parts.push_back({{"representative", to_json(rep)}, {"classes", idx}});
  }
  const bool partition = members == top.size() && seen.size() == top.size();
  j["clopen_partition"] = {{"k", to_json(k)}, {"parts", parts}, {"disjoint_exhaustive", partition},
                           {"restriction_compatible", compatible}};
  pass = pass && partition && compatible;

  // Separating compact sets for distinct pairs of top classes.
  json seps = json::array();
  std::size_t sep_fail = 0, sep_count = 0;
  for (std::size_t a = 0; a < top.size() && sep_count < c.max_separations; ++a) {
    for (std::size_t b = a + 1; b < top.size() && sep_count < c.max_separations; ++b) {
      ++sep_count;
      try {
        json w = separation_check(top.classes[a], top.classes[b], separating_compact(top.classes[a], top.classes[b]));
        if (!w["verified"].get<bool>()) ++sep_fail;
        w["pair"] = {a, b};
        seps.push_back(w);
      } catch (const BudgetError& e) {
        ++sep_fail;
        seps.push_back({{"pair", {a, b}}, {"error", e.what()}});
      }
    }
  }
  j["separation"] = {{"pairs", sep_count}, {"failures", sep_fail}, {"witnesses", seps}};
  pass = pass && sep_fail == 0;

  // Metric sanity on the top classes.
  const std::size_t m = std::min<std::size_t>(top.size(), 40);
  std::vector<std::vector<double>> d(m, std::vector<double>(m));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) d[a][b] = chabauty_distance(top.classes[a], top.classes[b]);
  }
  std::size_t metric_fail = 0, triangle_fail = 0;
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (d[a][b] != d[b][a] || ((a == b) != (d[a][b] == 0.0))) ++metric_fail;
      for (std::size_t e = 0; e < m; ++e) {
        if (d[a][e] > d[a][b] + d[b][e] + 1e-12) ++triangle_fail;
      }
    }
  }
  j["metric"] = {{"classes", m}, {"axiom_failures", metric_fail}, {"triangle_failures", triangle_fail}};
  pass = pass && metric_fail == 0 && triangle_fail == 0;

  // Translates Λ + 10^{-k} e_1 converge to Λ.
  const std::size_t dim = c.descriptor.dim();
  const QuadraticScalar& r = c.hull_radii.back();
  const Window view = Window::ball(dim, r + QuadraticScalar(1));
  std::vector<PointSample> seq;
  QuadraticScalar t(1);
  for (int i = 0; i < 8; ++i, t /= QuadraticScalar(10)) {
    std::vector<QuadraticScalar> g(dim);
    g[0] = t;
    seq.push_back(left_translate_points(c.descriptor, GroupElement(c.descriptor.kind(), g), view));
  }
  const ConvergenceVerdict conv = check_convergence(seq, enumerate_window(c.descriptor, view), r, c.tol);
  j["convergence"] = {{"pass", conv.pass}, {"condition1", conv.condition1}, {"condition2", conv.condition2},
                      {"matches", conv.matches.size()}, {"failures", conv.failures.size()}};
  pass = pass && conv.pass;

  j["radii"] = json::array();
  for (const auto& cat : cats) j["radii"].push_back({{"radius", to_json(cat.radius)}, {"classes", cat.size()}});
  j["pass"] = pass;
  return j;
}

json groupoid_suite(const RunConfig& c) {
  std::mt19937_64 rng(c.seed);
  const ArrowSampler sampler(c.descriptor, c.radius, c.arrow_radius, c.sample);
  std::vector<std::pair<Arrow, Arrow>> pairs;
  std::vector<std::array<Arrow, 3>> triples;
  for (std::size_t i = 0; i < c.pairs; ++i) pairs.push_back(sampler.pair(rng));
  for (std::size_t i = 0; i < c.triples; ++i) triples.push_back(sampler.triple(rng));
  const AxiomReport axioms = check_axioms(pairs, triples);

  const PatchCatalog cat = enumerate_patches(c.descriptor, c.radius, c.sample);
  const Window u0 = discreteness_window(difference_carrier(c.descriptor));
  const BisectionSurvey bis = survey_bisections(cat, u0, c.bisections, rng);

  json j{{"axioms", to_json(axioms)}, {"bisections", to_json(bis)}, {"u0", to_json(u0)}};
  bool pass = axioms.violations == 0 && (c.pairs + c.triples == 0 || axioms.verified() > 0) && bis.pass;
  const auto& desc = c.descriptor;
  if (desc.is_lattice() && desc.lattice_data().offsets.size() == 1) {
    const auto arrows = enumerate_arrows(cat, c.arrow_radius);
    std::set<GroupElement> xs;
    for (const auto& a : arrows) xs.insert(a.x());
    const auto pts = enumerate_window(desc, Window::ball(desc.dim(), c.arrow_radius)).points;
    const bool bijective = cat.size() == 1 && arrows.size() == pts.size() && xs == std::set<GroupElement>(pts.begin(), pts.end());
    j["lattice_recovery"] = {{"classes", cat.size()}, {"arrows", arrows.size()}, {"points", pts.size()}, {"pass", bijective}};
    pass = pass && bijective;
  }
  j["pass"] = pass;
  return j;
}

InnerAmenabilityParams witness_params(const RunConfig& c) {
  InnerAmenabilityParams p;
  p.radius = c.radius;
  p.arrow_radius = c.arrow_radius;
  p.sample = c.sample;
  p.k = c.k;
  p.eps = c.eps;
  p.samples = c.samples;
  p.support_pairs = c.support_pairs;
  p.max_n = c.max_n;
  p.seed = c.seed;
  return p;
}

json witness_suite(const RunConfig& c) { return to_json(inner_amenability_report(c.descriptor, witness_params(c))); }

json run_suite(const RunConfig& c, const std::string& which) {
  if (which == "ud") return ud_suite(c);
  if (which == "flc") return flc_suite(c);
  if (which == "patches") return patches_suite(c);
  if (which == "hull") return hull_suite(c);
  if (which == "groupoid") return groupoid_suite(c);
  if (which == "witness") return witness_suite(c);
  throw ConfigError("unknown check '" + which + "'");
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"ud", "flc", "patches", "hull", "groupoid", "witness", "all"};
  return names;
}

CommandResult cmd_generate(const RunConfig& c) {
  const PointSample s = enumerate_window(c.descriptor, c.sample);
  CommandResult r;
  json j = header(c, "generate");
  j["count"] = s.points.size();
  j["points"] = to_json(s.points);
  r.artifacts.push_back({"points", "json", dump(j)});
  r.artifacts.push_back({"points", "csv", points_csv(s.points)});
  if (c.descriptor.dim() <= 2) r.artifacts.push_back({"points", "svg", points_svg(s.points, c.sample, c.descriptor.label())});
  return r;
}

CommandResult cmd_check(const RunConfig& c, const std::string& which) {
  json j = header(c, "check");
  j["suite"] = which;
  bool pass = true;
  json results = json::object();
  if (which == "all") {
    for (const auto& name : suite_names()) {
      if (name == "all") continue;
      results[name] = run_suite(c, name);
      pass = pass && results[name]["pass"].get<bool>();
    }
  } else {
    results[which] = run_suite(c, which);
    pass = results[which]["pass"].get<bool>();
  }
  j["results"] = results;
  j["pass"] = pass;
  return {pass, {{"check", "json", dump(j)}}};
}

CommandResult cmd_patches(const RunConfig& c) {
  json j = header(c, "patches");
  j["catalog"] = to_json(enumerate_patches(c.descriptor, c.radius, c.sample));
  return {true, {{"catalog", "json", dump(j)}}};
}

CommandResult cmd_hull(const RunConfig& c) {
  json j = header(c, "hull");
  j["hull"] = hull_suite(c);
  return {j["hull"]["pass"].get<bool>(), {{"hull", "json", dump(j)}}};
}

CommandResult cmd_groupoid(const RunConfig& c) {
  const PatchCatalog cat = enumerate_patches(c.descriptor, c.radius, c.sample);
  json arrows = json::array();
  for (const auto& a : enumerate_arrows(cat, c.arrow_radius)) {
    const auto idx = cat.find(a.src());
    arrows.push_back({{"x", to_json(a.x())}, {"class", idx ? json(*idx) : json(nullptr)}, {"budget", to_json(a.budget())}});
  }
  json j = header(c, "groupoid");
  j["classes"] = cat.size();
  j["arrows"] = arrows;
  j["checks"] = groupoid_suite(c);
  return {j["checks"]["pass"].get<bool>(), {{"groupoid", "json", dump(j)}}};
}

CommandResult cmd_witness(const RunConfig& c) {
  json j = header(c, "witness");
  j["report"] = witness_suite(c);
  return {j["report"]["pass"].get<bool>(), {{"witness", "json", dump(j)}}};
}

CommandResult cmd_report(const RunConfig& c) {
  CommandResult r;
  for (auto part : {cmd_generate(c), cmd_patches(c), cmd_check(c, "all")}) {
    r.pass = r.pass && part.pass;
    for (auto& a : part.artifacts) r.artifacts.push_back(std::move(a));
  }
  for (auto& a : r.artifacts) {
    if (a.name == "check") a.name = "report";
  }
  return r;
}

}  // namespace flc::cli
