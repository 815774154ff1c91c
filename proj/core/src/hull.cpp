#include "flc/hull.hpp"

#include <algorithm>

#include "flc/error.hpp"

namespace flc {

namespace {

QuadraticScalar distance(const GroupElement& a, const GroupElement& b) { return sup_norm(group_mul(group_inv(a), b)); }

std::optional<QuadraticScalar> nearest(const GroupElement& p, const std::vector<GroupElement>& others) {
  std::optional<QuadraticScalar> best;
  for (const auto& q : others) {
    QuadraticScalar d = distance(p, q);
    if (!best || d < *best) best = std::move(d);
  }
  return best;
}

const GroupElement* nearest_point(const GroupElement& p, const std::vector<GroupElement>& others,
                                  QuadraticScalar* dist) {
  const GroupElement* best = nullptr;
  for (const auto& q : others) {
    QuadraticScalar d = distance(p, q);
    if (!best || d < *dist) {
      best = &q;
      *dist = std::move(d);
    }
  }
  return best;
}

QuadraticScalar one_sided(const Patch& from, const Patch& to) {
  QuadraticScalar worst(0);
  for (const auto& p : from.points()) {
    if (p.is_identity()) continue;
    // p ∈ P ∩ B_{1/ε} forces ε <= 1/|p|, so p caps the infimum at 1/|p|.
    QuadraticScalar cap = QuadraticScalar(1) / sup_norm(p);
    const auto d = nearest(p, to.points());
    worst = max(worst, d ? min(*d, cap) : cap);
  }
  return worst;
}

std::vector<GroupElement> within(const std::vector<GroupElement>& pts, const Window& w) {
  std::vector<GroupElement> out;
  for (const auto& p : pts) {
    if (window_contains(w, p)) out.push_back(p);
  }
  return out;
}

}  // namespace

Patch restrict_patch(const Patch& p, const QuadraticScalar& r) {
  if (p.radius() < r) throw DomainError("restriction radius " + r.to_string() + " exceeds patch radius");
  return Patch(r, within(p.points(), Window::ball(p.dim(), r)));
}

RefinementMap build_refinement(const PatchCatalog& source, const PatchCatalog& target) {
  if (source.radius < target.radius) throw DomainError("refinement target radius exceeds source radius");
  RefinementMap map{source.radius, target.radius, {}};
  map.assignment.reserve(source.size());
  for (const auto& cls : source.classes) {
    const Patch r = restrict_patch(cls, target.radius);
    const auto idx = target.find(r);
    if (!idx) throw BudgetError("restriction of a class is missing from the target catalog");
    map.assignment.push_back(*idx);
  }
  return map;
}

RefinementMap compose_refinements(const RefinementMap& first, const RefinementMap& second) {
  if (first.target_radius != second.source_radius) throw DomainError("refinement radii do not chain");
  RefinementMap out{first.source_radius, second.target_radius, {}};
  for (auto i : first.assignment) {
    if (i >= second.assignment.size()) throw DomainError("refinement maps do not chain");
    out.assignment.push_back(second.assignment[i]);
  }
  return out;
}

double chabauty_distance(const Patch& p, const Patch& q) {
  if (p.radius() != q.radius()) throw DomainError("chabauty_distance needs equal radii");
  const QuadraticScalar d = max(one_sided(p, q), one_sided(q, p));
  return min(d, QuadraticScalar(1)).to_double();
}

ConvergenceVerdict check_convergence(const std::vector<PointSample>& seq, const PointSample& limit,
                                     const QuadraticScalar& radius, double tol) {
  if (seq.size() < 2) throw DomainError("check_convergence needs at least two samples");
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
  if (limit.points.empty()) throw DomainError("empty limit sample");
  const Window ball = Window::ball(limit.points.front().dim(), radius);
  if (!window_subset(ball, limit.window)) throw BudgetError("limit sample does not cover B_R");
  for (const auto& s : seq) {
    if (!window_subset(ball, s.window)) throw BudgetError("sample window " + s.window.to_string() + " does not cover B_R");
  }

  const QuadraticScalar eps{mpq_class(tol)};
  const auto& last = seq.back().points;
  const auto& prev = seq[seq.size() - 2].points;
  ConvergenceVerdict v{true, true, true, radius, tol, {}, {}};

  for (const auto& x : within(limit.points, ball)) {
    QuadraticScalar d;
    const GroupElement* y = nearest_point(x, last, &d);
    if (y && d <= eps) {
      v.matches.push_back({x, *y, d.to_double()});
    } else {
      v.condition1 = false;
      v.failures.push_back({1, x, y ? d.to_double() : -1.0});
    }
  }
  for (const auto& y : within(last, ball)) {
    const auto stable = nearest(y, prev);
    if (!stable || eps < *stable) continue;
    const auto d = nearest(y, limit.points);
    if (!d || eps < *d) {
      v.condition2 = false;
      v.failures.push_back({2, y, d ? d->to_double() : -1.0});
    }
  }
  v.pass = v.condition1 && v.condition2;
  return v;
}

ClopenClassId classify_clopen(const Patch& p, const Region& k) {
  const Window ball = Window::ball(p.dim(), p.radius());
  for (const auto& box : k.boxes) {
    if (box.dim() != p.dim()) throw DomainError("window dimension mismatch");
    if (!window_subset(box, ball)) throw DomainError("K " + box.to_string() + " exceeds the patch radius");
  }
  std::vector<GroupElement> kp;
  for (const auto& g : p.points()) {
    if (k.contains(g)) kp.push_back(g);
  }
  ClopenClassId id{k, {}};
  bool first = true;
  for (const auto& f : kp) {
    const GroupElement inv = group_inv(f);
    std::vector<GroupElement> shifted;
    shifted.reserve(kp.size());
    for (const auto& g : kp) shifted.push_back(group_mul(inv, g));
    std::sort(shifted.begin(), shifted.end());
    if (first || shifted < id.representative) id.representative = std::move(shifted);
    first = false;
  }
  return id;
}

namespace {

Window clipped_box(std::vector<QuadraticScalar> lo, std::vector<QuadraticScalar> hi, const QuadraticScalar& c) {
  for (std::size_t i = 0; i < lo.size(); ++i) {
    lo[i] = max(lo[i], -c);
    hi[i] = min(hi[i], c);
  }
  return Window::box(std::move(lo), std::move(hi));
}

std::optional<SeparationWitness> try_separate(const Patch& p, const Patch& q, const GroupElement& x,
                                              const QuadraticScalar& c) {
  const std::size_t n = x.dim();
  const GroupElement e = p.identity();
  const GroupElement xinv = group_inv(x);
  auto accept = [&](const Region& k) -> std::optional<SeparationWitness> {
    if (k.contains(xinv)) return std::nullopt;
    for (const auto& g : p.points()) {
      if (k.contains(g) != (g == e || g == x)) return std::nullopt;
    }
    SeparationWitness w{k, x, false, classify_clopen(p, k), classify_clopen(q, k)};
    if (w.class_p == w.class_q) return std::nullopt;
    return w;
  };

  QuadraticScalar delta = c / QuadraticScalar(4);
  for (int step = 0; step < 24; ++step, delta /= QuadraticScalar(2)) {
    std::vector<QuadraticScalar> lo(n), hi(n);
    for (std::size_t i = 0; i < n; ++i) {
      lo[i] = min(QuadraticScalar(0), x[i]) - delta;
      hi[i] = max(QuadraticScalar(0), x[i]) + delta;
    }
    if (auto w = accept(Region(clipped_box(lo, hi, c)))) return w;

    std::vector<QuadraticScalar> elo(n, -delta), ehi(n, delta), xlo(n), xhi(n);
    for (std::size_t i = 0; i < n; ++i) {
      xlo[i] = x[i] - delta;
      xhi[i] = x[i] + delta;
    }
    if (auto w = accept(Region({clipped_box(elo, ehi, c), clipped_box(xlo, xhi, c)}))) return w;
  }
  return std::nullopt;
}

std::vector<GroupElement> missing_from(const Patch& a, const Patch& b) {
  std::vector<GroupElement> out;
  std::set_difference(a.points().begin(), a.points().end(), b.points().begin(), b.points().end(),
                      std::back_inserter(out));
  std::stable_sort(out.begin(), out.end(), [](const GroupElement& u, const GroupElement& v) {
    return sup_norm(u) < sup_norm(v);
  });
  return out;
}

}  // namespace

SeparationWitness separating_compact(const Patch& p_in, const Patch& q_in) {
  if (p_in.dim() != q_in.dim() || p_in.kind() != q_in.kind()) throw DomainError("patches live in different groups");
  const QuadraticScalar c = min(p_in.radius(), q_in.radius());
  const Patch p = restrict_patch(p_in, c);
  const Patch q = restrict_patch(q_in, c);
  if (p.points() == q.points()) throw DomainError("patches agree on their common radius");

  for (const auto& x : missing_from(p, q)) {
    if (auto w = try_separate(p, q, x, c)) return *w;
  }
  for (const auto& x : missing_from(q, p)) {
    if (auto w = try_separate(q, p, x, c)) {
      std::swap(w->class_p, w->class_q);
      w->swapped = true;
      return *w;
    }
  }
  throw BudgetError("no separating compact set inside the common radius");
}

}  // namespace flc
