#include <doctest.h>

#include "flc/error.hpp"
#include "flc/presets.hpp"
#include "oracles.hpp"

using namespace flc;

namespace {

QuadraticScalar S(const char* text) { return parse_scalar(text); }
GroupElement g1(const QuadraticScalar& v) { return GroupElement::abelian({v}); }
Window interval(const char* lo, const char* hi, bool open = false) { return Window::box({S(lo)}, {S(hi)}, open); }

std::vector<oracle::Pair> pairs(const PointSample& s) {
  std::vector<oracle::Pair> out;
  for (const auto& g : s.points) out.push_back(oracle::to_pair(g));
  return out;
}

}  // namespace

TEST_CASE("silver mean points in [0,4]") {
  const auto s = enumerate_window(presets::silver_mean(), interval("0", "4"));
  CHECK(s.points == std::vector<GroupElement>{g1(0), g1(1), g1(S("1+sqrt(2)")), g1(S("2+sqrt(2)"))});
  CHECK(pairs(s) == oracle::silver_points(0, 4, 10));
}

TEST_CASE("silver mean agrees with the integer brute force on wide windows") {
  const auto desc = presets::silver_mean();
  for (long h : {1L, 7L, 25L, 60L}) {
    const auto s = enumerate_window(desc, Window::ball(1, h));
    CHECK(pairs(s) == oracle::silver_points(-h, h, h + 4));
  }
  CHECK(enumerate_window(desc, interval("1/10", "9/10")).points.empty());
}

TEST_CASE("lattices enumerate their grid") {
  CHECK(enumerate_window(presets::integer_lattice(1), interval("-5/2", "5/2")).points ==
        std::vector<GroupElement>{g1(-2), g1(-1), g1(0), g1(1), g1(2)});
  CHECK(enumerate_window(presets::integer_lattice(2), Window::ball(2, 10)).points.size() == 441);
  CHECK(enumerate_window(presets::heisenberg_lattice(), Window::ball(3, 2)).points.size() == 125);
  CHECK(enumerate_window(presets::composite_lattice(), interval("0", "1")).points ==
        std::vector<GroupElement>{g1(0), g1(S("1/4")), g1(1)});
}

TEST_CASE("enumerated points are sorted, unique and inside the window") {
  for (const auto& name : presets::names()) {
    const auto desc = presets::by_name(name);
    const auto w = Window::ball(desc.dim(), desc.dim() == 3 ? S("3/2") : S("5"));
    const auto s = enumerate_window(desc, w);
    CHECK(std::is_sorted(s.points.begin(), s.points.end()));
    CHECK(std::adjacent_find(s.points.begin(), s.points.end()) == s.points.end());
    for (const auto& g : s.points) CHECK(window_contains(w, g));
  }
}

TEST_CASE("left translates") {
  const auto z = presets::integer_lattice(1);
  CHECK(left_translate_points(z, g1(1), interval("-1", "1")).points == std::vector<GroupElement>{g1(-1), g1(0), g1(1)});
  CHECK(left_translate_points(z, g1(S("1/2")), interval("0", "1")).points == std::vector<GroupElement>{g1(S("1/2"))});
  const auto sm = presets::silver_mean();
  const auto t = left_translate_points(sm, g1(S("-1-sqrt(2)")), interval("-1", "1")).points;
  CHECK(std::find(t.begin(), t.end(), g1(0)) != t.end());
}

TEST_CASE("difference carrier of the silver mean") {
  const auto sm = presets::silver_mean();
  CHECK(difference_sample(sm, interval("-1", "1", true)).points == std::vector<GroupElement>{g1(0)});
  CHECK(difference_sample(sm, interval("0", "3/2")).points == std::vector<GroupElement>{g1(0), g1(1), g1(S("sqrt(2)"))});
  CHECK(difference_sample(presets::integer_lattice(1), interval("-3", "3")).points.size() == 7);
  CHECK(pairs(difference_sample(sm, interval("0", "3/2"))) == oracle::silver_points(0, 1.5, 6, 2));
  CHECK(identity_gap(sm) == QuadraticScalar(1));
  CHECK(identity_gap(presets::composite_lattice()) == S("1/4"));
}

TEST_CASE("Heisenberg model set is closed under the group law on its carrier") {
  const auto desc = presets::heisenberg_silver_mean();
  const auto w = Window::ball(3, 1);
  const auto s = enumerate_window(desc, w);
  const auto carrier = difference_sample(desc, Window::ball(3, 2));
  for (const auto& a : s.points) {
    for (const auto& b : s.points) {
      const auto d = group_mul(group_inv(a), b);
      if (within_radius(d, 2)) CHECK(std::binary_search(carrier.points.begin(), carrier.points.end(), d));
    }
  }
}

TEST_CASE("descriptor validation") {
  CHECK_THROWS_AS(PointSetDescriptor::lattice("bad", GroupKind::abelian, {GroupElement::abelian({1}), GroupElement::abelian({2})}),
                  DomainError);
  CHECK_THROWS_AS(presets::by_name("penrose"), DomainError);
}
