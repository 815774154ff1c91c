#include "flc/regularity.hpp"

#include <algorithm>
#include <map>

#include "flc/error.hpp"
#include "neighbors.hpp"

namespace flc {

Patch::Patch(QuadraticScalar radius, std::vector<GroupElement> points)
    : radius_(std::move(radius)), points_(std::move(points)) {
  if (scalar_sign(radius_) < 0) throw DomainError("patch radius must be non-negative");
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
  const auto e = std::find_if(points_.begin(), points_.end(), [](const GroupElement& g) { return g.is_identity(); });
  if (e == points_.end()) throw DomainError("patch does not contain the identity");
  for (const auto& p : points_) {
    if (!within_radius(p, radius_)) throw DomainError("patch point " + p.to_string() + " outside radius");
  }
}

bool Patch::contains(const GroupElement& g) const { return std::binary_search(points_.begin(), points_.end(), g); }

std::optional<std::size_t> PatchCatalog::find(const Patch& p) const {
  auto it = std::lower_bound(classes.begin(), classes.end(), p,
                             [](const Patch& a, const Patch& b) { return a.points() < b.points(); });
  if (it != classes.end() && *it == p) return static_cast<std::size_t>(it - classes.begin());
  return std::nullopt;
}

namespace {

std::vector<GroupElement> anchors_in(const std::vector<GroupElement>& pts, const Window& sample) {
  std::vector<GroupElement> out;
  for (const auto& p : pts) {
    if (window_contains(sample, p)) out.push_back(p);
  }
  return out;
}

bool nearer_identity(const GroupElement& a, const GroupElement& b) {
  const auto na = sup_norm(a), nb = sup_norm(b);
  if (na != nb) return na < nb;
  return a < b;
}

}  // namespace

UdVerdict check_uniformly_discrete(const PointSetDescriptor& desc, const Window& u, const Window& sample) {
  if (u.dim() != desc.dim() || sample.dim() != desc.dim()) throw DomainError("window dimension mismatch");
  u.validate();
  sample.validate();
  if (!u.is_coordinate_symmetric()) throw DomainError("U must be a symmetric neighborhood of the identity");
  if (!window_contains(u, desc.identity())) throw DomainError("U must contain the identity");

  const Window diff = difference_hull(u, u, desc.kind());
  const PointSample pool = enumerate_window(desc, product_hull(sample, diff, desc.kind()));
  std::vector<GroupElement> anchors = anchors_in(pool.points, sample);
  std::sort(anchors.begin(), anchors.end(), nearer_identity);
  const detail::NeighborIndex index(pool.points);

  UdVerdict v{true, u, sample, 0, std::nullopt};
  for (const auto& lambda : anchors) {
    ++v.anchors_checked;
    const GroupElement inv = group_inv(lambda);
    std::optional<GroupElement> worst;
    index.for_candidates_in(lambda, diff, [&](const GroupElement& mu) {
      GroupElement p = group_mul(inv, mu);
      if (p.is_identity() || !window_contains(diff, p) || !difference_set_contains(u, p)) return;
      if (!worst || nearer_identity(p, *worst)) worst = std::move(p);
    });
    if (worst) {
      v.pass = false;
      v.counterexample = UdCounterexample{lambda, desc.identity(), *worst};
      return v;
    }
  }
  return v;
}

Window discreteness_window(const PointSetDescriptor& carrier, QuadraticScalar* gap) {
  const QuadraticScalar m = identity_gap(carrier);
  if (gap) *gap = m;
  QuadraticScalar r = m / QuadraticScalar(2);
  for (int attempt = 0; attempt < 32; ++attempt, r /= QuadraticScalar(2)) {
    Window u = Window::ball(carrier.dim(), r, true);
    const PointSample s = enumerate_window(carrier, difference_hull(u, u, carrier.kind()));
    const bool clean = std::none_of(s.points.begin(), s.points.end(), [&](const GroupElement& p) {
      return !p.is_identity() && difference_set_contains(u, p);
    });
    if (clean) return u;
  }
  throw BudgetError("no discreteness window found");
}

FlcVerdict check_flc(const PointSetDescriptor& desc, const Window& sample) {
  FlcVerdict v;
  const PointSetDescriptor carrier = difference_carrier(desc);
  v.u = discreteness_window(carrier, &v.carrier_identity_gap);
  v.point_set = check_uniformly_discrete(desc, v.u, sample);

  // Separations inside the carrier are identity gaps of its own carrier.
  const PointSetDescriptor second = difference_carrier(carrier);
  v.carrier_u = discreteness_window(second, &v.carrier_separation);
  v.carrier = check_uniformly_discrete(carrier, v.carrier_u, sample);

  v.closure_radius = QuadraticScalar(4) * v.carrier_identity_gap;
  const Window ball = Window::ball(desc.dim(), v.closure_radius);
  const PointSample pool = enumerate_window(desc, product_hull(sample, ball, desc.kind()));
  const PointSample carrier_pts = enumerate_window(carrier, ball);
  const detail::NeighborIndex index(pool.points);
  v.translate_closure = true;
  for (const auto& lambda : anchors_in(pool.points, sample)) {
    const GroupElement inv = group_inv(lambda);
    index.for_candidates_in(lambda, ball, [&](const GroupElement& mu) {
      if (!v.translate_closure) return;
      GroupElement p = group_mul(inv, mu);
      if (!window_contains(ball, p)) return;
      if (!std::binary_search(carrier_pts.points.begin(), carrier_pts.points.end(), p)) {
        v.translate_closure = false;
        v.closure_violation = std::move(p);
      }
    });
    if (!v.translate_closure) break;
  }
  v.pass = v.point_set.pass && v.carrier.pass && v.translate_closure;
  return v;
}

PatchCatalog enumerate_patches(const PointSetDescriptor& desc, const QuadraticScalar& radius, const Window& sample) {
  if (scalar_sign(radius) < 0) throw DomainError("patch radius must be non-negative");
  if (sample.dim() != desc.dim()) throw DomainError("window dimension mismatch");
  sample.validate();
  const Window ball = Window::ball(desc.dim(), radius);
  const PointSample pool = enumerate_window(desc, product_hull(sample, ball, desc.kind()));
  const detail::NeighborIndex index(pool.points);

  std::map<std::vector<GroupElement>, std::pair<std::size_t, GroupElement>> seen;
  for (const auto& lambda : anchors_in(pool.points, sample)) {
    const GroupElement inv = group_inv(lambda);
    std::vector<GroupElement> pts;
    index.for_candidates_in(lambda, ball, [&](const GroupElement& mu) {
      GroupElement p = group_mul(inv, mu);
      if (window_contains(ball, p)) pts.push_back(std::move(p));
    });
    std::sort(pts.begin(), pts.end());
    auto [it, inserted] = seen.try_emplace(std::move(pts), 0, lambda);
    ++it->second.first;
  }

  PatchCatalog cat{radius, sample, {}, {}, {}};
  for (auto& [pts, info] : seen) {
    cat.classes.emplace_back(radius, pts);
    cat.multiplicity.push_back(info.first);
    cat.anchors.push_back(info.second);
  }
  return cat;
}

}  // namespace flc
