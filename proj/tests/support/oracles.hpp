#pragma once

// Independent references for the exact code: integer-pair brute force for the
// silver-mean model set and 50-digit binary floats for signs.

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "flc/pointset.hpp"
#include "flc/quadratic.hpp"

namespace oracle {

using Real = boost::multiprecision::cpp_bin_float_50;
using Pair = std::pair<long, long>;  // a + b sqrt2

inline Real sqrt2() { return boost::multiprecision::sqrt(Real(2)); }
inline Real value(const Pair& x) { return Real(x.first) + Real(x.second) * sqrt2(); }
inline Real star(const Pair& x) { return Real(x.first) - Real(x.second) * sqrt2(); }

/// Sign of p + q sqrt(d) for small integer p, q.
inline int sign(long p, long q, int d) {
  const Real v = Real(p) + Real(q) * boost::multiprecision::sqrt(Real(d));
  if (abs(v) < Real(1e-40)) return 0;
  return v > 0 ? 1 : -1;
}

/// { a + b sqrt2 : |a|,|b| <= bound, |a - b sqrt2| <= internal, lo <= a + b sqrt2 <= hi }, sorted by value.
inline std::vector<Pair> silver_points(const Real& lo, const Real& hi, long bound, const Real& internal = 1,
                                       bool open = false) {
  std::vector<Pair> out;
  for (long a = -bound; a <= bound; ++a) {
    for (long b = -bound; b <= bound; ++b) {
      const Pair x{a, b};
      const Real v = value(x);
      if (abs(star(x)) > internal) continue;
      if (open ? (v > lo && v < hi) : (v >= lo && v <= hi)) out.push_back(x);
    }
  }
  std::sort(out.begin(), out.end(), [](const Pair& x, const Pair& y) { return value(x) < value(y); });
  return out;
}

/// Distinct anchored patches {μ - λ : |μ - λ| <= r} of the silver-mean set for anchors |λ| <= s.
inline std::set<std::set<Pair>> silver_patches(const Real& r, const Real& s) {
  const long bound = static_cast<long>(s + r) + 4;
  const auto pts = silver_points(-s - r, s + r, bound);
  std::set<std::set<Pair>> classes;
  for (const auto& l : pts) {
    if (abs(value(l)) > s) continue;
    std::set<Pair> patch;
    for (const auto& m : pts) {
      const Pair d{m.first - l.first, m.second - l.second};
      if (abs(value(d)) <= r) patch.insert(d);
    }
    classes.insert(patch);
  }
  return classes;
}

/// Integer pair of an exact point of the silver-mean set.
inline Pair to_pair(const flc::GroupElement& g) {
  const auto& s = g[0];
  return {s.p().get_num().get_si(), s.q().get_num().get_si()};
}

}  // namespace oracle
