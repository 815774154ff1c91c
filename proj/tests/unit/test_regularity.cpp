#include <doctest.h>

#include "flc/error.hpp"
#include "flc/presets.hpp"
#include "flc/regularity.hpp"
#include "oracles.hpp"

using namespace flc;

namespace {

QuadraticScalar S(const char* text) { return parse_scalar(text); }
GroupElement g1(const QuadraticScalar& v) { return GroupElement::abelian({v}); }
Window half_open() { return Window::ball(1, S("1/2"), true); }

std::set<std::set<oracle::Pair>> as_pairs(const PatchCatalog& cat) {
  std::set<std::set<oracle::Pair>> out;
  for (const auto& p : cat.classes) {
    std::set<oracle::Pair> s;
    for (const auto& g : p.points()) s.insert(oracle::to_pair(g));
    out.insert(s);
  }
  return out;
}

}  // namespace

TEST_CASE("uniform discreteness verdicts") {
  CHECK(check_uniformly_discrete(presets::integer_lattice(1), half_open(), Window::ball(1, 10)).pass);
  CHECK(check_uniformly_discrete(presets::silver_mean(), half_open(), Window::ball(1, 20)).pass);
  const auto v = check_uniformly_discrete(presets::composite_lattice(), half_open(), Window::ball(1, 10));
  REQUIRE_FALSE(v.pass);
  REQUIRE(v.counterexample);
  CHECK(v.counterexample->anchor == g1(0));
  CHECK(v.counterexample->first == g1(0));
  CHECK(v.counterexample->second == g1(S("1/4")));
  CHECK(check_uniformly_discrete(presets::composite_lattice(), Window::ball(1, S("1/8"), true), Window::ball(1, 10)).pass);
}

TEST_CASE("uniform discreteness needs a symmetric neighbourhood") {
  CHECK_THROWS_AS(check_uniformly_discrete(presets::integer_lattice(1), Window::box({S("-1/4")}, {S("1/2")}, true),
                                           Window::ball(1, 3)),
                  DomainError);
}

TEST_CASE("finite local complexity of the presets") {
  const auto sm = check_flc(presets::silver_mean(), Window::ball(1, 100));
  CHECK(sm.pass);
  CHECK(sm.u == half_open());
  CHECK(sm.carrier_identity_gap == QuadraticScalar(1));
  CHECK(check_flc(presets::integer_lattice(2), Window::ball(2, 10)).pass);
  CHECK(check_flc(presets::composite_lattice(), Window::ball(1, 20)).pass);
  CHECK(check_flc(presets::heisenberg_lattice(), Window::ball(3, 2)).pass);
  CHECK(check_flc(presets::heisenberg_silver_mean(), Window::ball(3, 2)).pass);
}

TEST_CASE("widened silver-mean window is still locally finite") {
  const auto desc = PointSetDescriptor::model_set("wide", GroupKind::abelian, {{1, QuadraticScalar::root(2)}},
                                                  {{1, -QuadraticScalar::root(2)}}, GroupKind::abelian, Window::ball(1, 10));
  CHECK(check_flc(desc, Window::ball(1, 20)).pass);
}

TEST_CASE("patch construction") {
  CHECK_THROWS_AS(Patch(2, {g1(1)}), DomainError);
  CHECK_THROWS_AS(Patch(1, {g1(0), g1(2)}), DomainError);
  const Patch p(2, {g1(1), g1(0), g1(1), g1(-2)});
  CHECK(p.size() == 3);
  CHECK(p.points().front() == g1(-2));
}

TEST_CASE("lattices have a single patch class at every radius") {
  for (int r = 1; r <= 10; ++r) {
    CHECK(enumerate_patches(presets::integer_lattice(1), r, Window::ball(1, 20)).size() == 1);
    CHECK(enumerate_patches(presets::integer_lattice(2), r, Window::ball(2, 3)).size() == 1);
  }
  const auto cat = enumerate_patches(presets::integer_lattice(1), 2, Window::ball(1, 50));
  REQUIRE(cat.size() == 1);
  CHECK(cat.classes[0].points() == std::vector<GroupElement>{g1(-2), g1(-1), g1(0), g1(1), g1(2)});
  CHECK(cat.multiplicity[0] == 101);
  CHECK(enumerate_patches(presets::silver_mean(), 0, Window::ball(1, 20)).size() == 1);
}

TEST_CASE("silver-mean catalogs match the brute-force patch oracle") {
  const auto desc = presets::silver_mean();
  for (const char* r : {"6/5", "3/2", "2", "3"}) {
    const auto cat = enumerate_patches(desc, S(r), Window::ball(1, 100));
    const double rd = S(r).to_double();
    CHECK(as_pairs(cat) == oracle::silver_patches(rd, 100));
  }
  CHECK(enumerate_patches(desc, S("6/5"), Window::ball(1, 100)).size() == 3);
  CHECK(enumerate_patches(desc, S("3/2"), Window::ball(1, 100)).size() == 5);
  CHECK(enumerate_patches(desc, 3, Window::ball(1, 100)).size() == 9);
}

TEST_CASE("catalog counts stabilise in the sample window") {
  for (const auto& name : {"z", "z2", "composite", "silver_mean"}) {
    const auto desc = presets::by_name(name);
    const auto s = Window::ball(desc.dim(), desc.dim() == 2 ? 5 : 100);
    const auto big = Window::ball(desc.dim(), desc.dim() == 2 ? 50 : 1000);
    CHECK(enumerate_patches(desc, 3, s).classes == enumerate_patches(desc, 3, big).classes);
  }
  const auto h = presets::heisenberg_lattice();
  CHECK(enumerate_patches(h, 1, Window::ball(3, 1)).size() == 1);
}

TEST_CASE("class count is monotone in radius and sample") {
  const auto desc = presets::silver_mean();
  std::size_t last = 0;
  for (const char* r : {"1/2", "1", "3/2", "2", "5/2", "3", "4"}) {
    const auto n = enumerate_patches(desc, S(r), Window::ball(1, 200)).size();
    CHECK(n >= last);
    last = n;
  }
  CHECK(enumerate_patches(desc, 3, Window::ball(1, 5)).size() <= enumerate_patches(desc, 3, Window::ball(1, 50)).size());
}

TEST_CASE("discreteness window of a carrier") {
  QuadraticScalar gap;
  const auto w = discreteness_window(difference_carrier(presets::silver_mean()), &gap);
  CHECK(gap == QuadraticScalar(1));
  CHECK(w == half_open());
}
