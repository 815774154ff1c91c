#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "flc/group.hpp"

namespace flc::detail {

/// Points sorted by the float approximation of their first coordinate, for
/// locating every μ with λ^{-1}μ in a box. Both group laws translate the first
/// coordinate additively, so λB has x-range λ_x + B_x. Lookups are widened by
/// a slack and callers always re-test exactly.
class NeighborIndex {
 public:
  explicit NeighborIndex(std::vector<GroupElement> points) : points_(std::move(points)) {
    keys_.reserve(points_.size());
    std::vector<std::size_t> order(points_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::vector<double> x(points_.size());
    for (std::size_t i = 0; i < points_.size(); ++i) x[i] = points_[i][0].to_double();
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
    std::vector<GroupElement> sorted;
    sorted.reserve(points_.size());
    for (auto i : order) {
      approx_.push_back(points_[i].approx());
      sorted.push_back(std::move(points_[i]));
      keys_.push_back(x[i]);
    }
    points_ = std::move(sorted);
  }

  /// Calls f(mu) for every point with λ^{-1}μ possibly inside `box`, using a
  /// float evaluation of the group law on all coordinates.
  template <class F>
  void for_candidates_in(const GroupElement& anchor, const Window& box, F&& f) const {
    const std::vector<double> a = anchor.approx();
    std::vector<double> lo(box.dim()), hi(box.dim());
    for (std::size_t c = 0; c < box.dim(); ++c) {
      lo[c] = box.lo[c].to_double();
      hi[c] = box.hi[c].to_double();
    }
    const bool heis = anchor.kind() == GroupKind::heisenberg;
    const double l = a[0] + lo[0], h = a[0] + hi[0];
    auto first = std::lower_bound(keys_.begin(), keys_.end(), l - slack(l, h));
    auto last = std::upper_bound(keys_.begin(), keys_.end(), h + slack(l, h));
    std::vector<double> d(box.dim());
    for (auto it = first; it != last; ++it) {
      const auto i = static_cast<std::size_t>(it - keys_.begin());
      const auto& m = approx_[i];
      double scale = 1.0;
      for (std::size_t c = 0; c < d.size(); ++c) {
        d[c] = m[c] - a[c];
        scale += std::abs(m[c]) + std::abs(a[c]);
      }
      // (-x,-y,xy-z)(x',y',z') = (x'-x, y'-y, z'-z - x(y'-y))
      if (heis) {
        d[2] -= a[0] * d[1];
        scale += std::abs(a[0]) * (std::abs(m[1]) + std::abs(a[1]));
      }
      const double tol = 1e-9 * scale;
      bool inside = true;
      for (std::size_t c = 0; c < d.size() && inside; ++c) inside = d[c] >= lo[c] - tol && d[c] <= hi[c] + tol;
      if (inside) f(points_[i]);
    }
  }

  /// Calls f(mu) for every point whose first coordinate may lie in
  /// [anchor_x + lo, anchor_x + hi].
  template <class F>
  void for_candidates(const GroupElement& anchor, const QuadraticScalar& lo, const QuadraticScalar& hi, F&& f) const {
    const double ax = anchor[0].to_double();
    const double l = ax + lo.to_double();
    const double h = ax + hi.to_double();
    auto first = std::lower_bound(keys_.begin(), keys_.end(), l - slack(l, h));
    auto last = std::upper_bound(keys_.begin(), keys_.end(), h + slack(l, h));
    for (auto it = first; it != last; ++it) f(points_[static_cast<std::size_t>(it - keys_.begin())]);
  }

  const std::vector<GroupElement>& points() const { return points_; }

 private:
  static double slack(double l, double h) { return 1e-7 * (1.0 + std::abs(l) + std::abs(h)); }

  std::vector<GroupElement> points_;
  std::vector<std::vector<double>> approx_;
  std::vector<double> keys_;
};

}  // namespace flc::detail
