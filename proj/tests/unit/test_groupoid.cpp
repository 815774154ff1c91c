#include <doctest.h>

#include <numeric>
#include <random>

#include "flc/error.hpp"
#include "flc/groupoid.hpp"
#include "flc/presets.hpp"

using namespace flc;

namespace {

QuadraticScalar S(const char* text) { return parse_scalar(text); }
GroupElement g1(const QuadraticScalar& v) { return GroupElement::abelian({v}); }

Patch zpatch(long r) {
  std::vector<GroupElement> pts;
  for (long i = -r; i <= r; ++i) pts.push_back(g1(i));
  return Patch(r, pts);
}

}  // namespace

TEST_CASE("source and range") {
  const auto a = Arrow::make(g1(1), zpatch(1));
  CHECK(a.budget() == QuadraticScalar(0));
  CHECK(range(a).points() == std::vector<GroupElement>{g1(0)});
  const auto p = zpatch(2);
  CHECK(range(unit(p)) == p);
  CHECK(range(Arrow::make(g1(1), p)).points() == std::vector<GroupElement>{g1(-1), g1(0), g1(1)});
  CHECK_THROWS_AS(Arrow::make(g1(S("1/2")), p), DomainError);
  CHECK_THROWS_AS(Arrow::make(g1(2), zpatch(1)), DomainError);
}

TEST_CASE("inverse") {
  const auto p = zpatch(2);
  CHECK(same_arrow(inverse(unit(p)), unit(p)));
  const auto inv = inverse(Arrow::make(g1(1), zpatch(3)));
  CHECK(inv.x() == g1(-1));
  CHECK(inv.src() == zpatch(2));
  const auto back = inverse(inv);
  CHECK(back.x() == g1(1));
  CHECK(back.src() == zpatch(1));
}

TEST_CASE("composition") {
  const auto u = unit(zpatch(3));
  const auto uu = compose(u, u);
  REQUIRE(uu.status == ComposeStatus::defined);
  CHECK(same_arrow(*uu.arrow, u));

  const auto a1 = Arrow::make(g1(1), zpatch(5));
  const auto a2 = Arrow::make(g1(2), zpatch(4));
  const auto c = compose(a2, a1);
  REQUIRE(c.status == ComposeStatus::defined);
  CHECK(c.arrow->x() == g1(3));
  CHECK(c.arrow->src() == zpatch(5));
  CHECK(c.arrow->budget() == QuadraticScalar(2));

  const Patch p(S("6/5"), {g1(-1), g1(0), g1(1)});
  const Patch q(S("6/5"), {g1(-1), g1(0)});
  CHECK(compose(unit(p), unit(q)).status == ComposeStatus::undefined);
}

TEST_CASE("Heisenberg composition multiplies on the left") {
  const auto cat = enumerate_patches(presets::heisenberg_lattice(), 3, Window::ball(3, 1));
  REQUIRE(cat.size() == 1);
  const auto p = std::make_shared<const Patch>(cat.classes[0]);
  const auto x = GroupElement::heisenberg(1, 0, 0), y = GroupElement::heisenberg(0, 1, 0);
  const auto a1 = Arrow::make(x, p);
  const auto a2 = Arrow::make(y, range(a1));
  const auto c = compose(a2, a1);
  REQUIRE(c.status == ComposeStatus::defined);
  CHECK(c.arrow->x() == group_mul(y, x));
  CHECK(agree(range(*c.arrow), range(a2)));
}

TEST_CASE("arrow enumeration") {
  const auto z = enumerate_patches(presets::integer_lattice(1), 3, Window::ball(1, 10));
  const auto arrows = enumerate_arrows(z, 2);
  REQUIRE(arrows.size() == 5);
  std::vector<GroupElement> xs;
  for (const auto& a : arrows) xs.push_back(a.x());
  std::sort(xs.begin(), xs.end());
  CHECK(xs == std::vector<GroupElement>{g1(-2), g1(-1), g1(0), g1(1), g1(2)});

  const auto sm = enumerate_patches(presets::silver_mean(), S("6/5"), Window::ball(1, 100));
  CHECK(enumerate_arrows(sm, 0).size() == sm.size());
  std::size_t points = 0;
  for (const auto& p : sm.classes) points += p.size();
  CHECK(enumerate_arrows(sm, S("6/5")).size() == points);
}

TEST_CASE("groupoid axioms on sampled truncations") {
  std::mt19937_64 rng(3);
  for (const auto& [name, sample] : {std::pair<const char*, long>{"z", 5}, {"silver_mean", 5}, {"heisenberg_lattice", 2}}) {
    const auto desc = presets::by_name(name);
    const ArrowSampler sampler(desc, 3, 1, Window::ball(desc.dim(), sample));
    std::vector<std::pair<Arrow, Arrow>> pairs;
    std::vector<std::array<Arrow, 3>> triples;
    for (int i = 0; i < 200; ++i) pairs.push_back(sampler.pair(rng));
    for (int i = 0; i < 60; ++i) triples.push_back(sampler.triple(rng));
    const auto report = check_axioms(pairs, triples);
    CHECK(report.violations == 0);
    CHECK(report.associativity > 0);
    CHECK(report.double_inverse > 0);
  }
}

TEST_CASE("Heisenberg sampling exercises non-commuting products") {
  std::mt19937_64 rng(4);
  const ArrowSampler sampler(presets::heisenberg_lattice(), 3, 1, Window::ball(3, 2));
  std::size_t noncommuting = 0;
  for (int i = 0; i < 200; ++i) {
    const auto [g, h] = sampler.pair(rng);
    if (group_mul(g.x(), h.x()) != group_mul(h.x(), g.x())) ++noncommuting;
  }
  CHECK(noncommuting > 0);
}

TEST_CASE("bisections") {
  const auto z = enumerate_patches(presets::integer_lattice(1), 3, Window::ball(1, 10));
  const auto u0 = Window::ball(1, S("1/2"), true);
  const auto unit_bis = build_bisection(g1(0), Window::ball(1, S("1/4"), true), {0}, z, u0);
  REQUIRE(unit_bis.arrows.size() == 1);
  CHECK(unit_bis.arrows[0].x() == g1(0));

  const auto bis = build_bisection(g1(1), Window::ball(1, S("1/4"), true), {0}, z, u0);
  CHECK(bis.arrows.size() == 1);
  CHECK(bis.source_injective);
  CHECK(bis.range_injective);
  CHECK_THROWS_AS(build_bisection(g1(1), Window::ball(1, 1, true), {0}, z, u0), DomainError);

  const auto sm = enumerate_patches(presets::silver_mean(), 3, Window::ball(1, 50));
  std::vector<std::size_t> all(sm.size());
  std::iota(all.begin(), all.end(), 0);
  const auto s = build_bisection(g1(0), Window::ball(1, S("1/4"), true), all, sm, u0);
  CHECK(s.arrows.size() == sm.size());
  CHECK(s.source_injective);
  CHECK(s.range_injective);
}

TEST_CASE("bisection survey") {
  std::mt19937_64 rng(8);
  for (const char* name : {"z", "composite", "silver_mean"}) {
    const auto desc = presets::by_name(name);
    const auto cat = enumerate_patches(desc, 3, Window::ball(1, 20));
    const auto u0 = discreteness_window(difference_carrier(desc));
    const auto s = survey_bisections(cat, u0, 50, rng);
    CHECK(s.pass);
    CHECK(s.source_violations == 0);
    CHECK(s.range_violations == 0);
  }
}
