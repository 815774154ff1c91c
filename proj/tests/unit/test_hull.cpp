#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "flc/error.hpp"
#include "flc/hull.hpp"
#include "flc/presets.hpp"

using namespace flc;

namespace {

QuadraticScalar S(const char* text) { return parse_scalar(text); }
GroupElement g1(const QuadraticScalar& v) { return GroupElement::abelian({v}); }
Window interval(const char* lo, const char* hi) { return Window::box({S(lo)}, {S(hi)}); }

Patch patch1(const char* r, std::initializer_list<const char*> pts) {
  std::vector<GroupElement> g;
  for (const char* p : pts) g.push_back(g1(S(p)));
  return Patch(S(r), g);
}

PatchCatalog silver(const char* r) { return enumerate_patches(presets::silver_mean(), S(r), Window::ball(1, 100)); }

}  // namespace

TEST_CASE("restriction") {
  CHECK(restrict_patch(patch1("2", {"-2", "-1", "0", "1", "2"}), 1) == patch1("1", {"-1", "0", "1"}));
  const auto p = patch1("3/2", {"-sqrt(2)", "0", "1"});
  CHECK(restrict_patch(p, S("3/2")) == p);
  CHECK(restrict_patch(p, S("11/10")) == patch1("11/10", {"0", "1"}));
  CHECK_THROWS_AS(restrict_patch(p, 2), DomainError);
}

TEST_CASE("refinement maps") {
  const auto z3 = enumerate_patches(presets::integer_lattice(1), 3, Window::ball(1, 10));
  const auto z1 = enumerate_patches(presets::integer_lattice(1), 1, Window::ball(1, 10));
  CHECK(build_refinement(z3, z1).assignment == std::vector<std::size_t>{0});
  const auto s2 = silver("2"), s1 = silver("1");
  const auto m = build_refinement(s2, s1);
  std::set<std::size_t> image(m.assignment.begin(), m.assignment.end());
  CHECK(image.size() == s1.size());
  const auto id = build_refinement(s2, s2);
  for (std::size_t i = 0; i < id.assignment.size(); ++i) CHECK(id.assignment[i] == i);
}

TEST_CASE("refinement maps compose functorially") {
  const auto a = silver("4"), b = silver("5/2"), c = silver("3/2"), d = silver("1");
  const auto ab = build_refinement(a, b), bc = build_refinement(b, c), cd = build_refinement(c, d);
  CHECK(compose_refinements(compose_refinements(ab, bc), cd).assignment == build_refinement(a, d).assignment);
  CHECK(compose_refinements(ab, compose_refinements(bc, cd)).assignment == build_refinement(a, d).assignment);
}

TEST_CASE("refinement fails loudly when a restriction is missing") {
  const auto tiny = enumerate_patches(presets::silver_mean(), 1, Window::ball(1, S("1/2")));
  REQUIRE(tiny.size() == 1);
  CHECK_THROWS_AS(build_refinement(silver("2"), tiny), BudgetError);
}

TEST_CASE("window metric values") {
  const auto p = patch1("2", {"-1", "0", "1"});
  CHECK(chabauty_distance(p, p) == 0.0);
  CHECK(chabauty_distance(p, patch1("2", {"-1", "0", "101/100"})) == doctest::Approx(0.01).epsilon(1e-12));
  CHECK(chabauty_distance(patch1("2", {"0"}), patch1("2", {"0", "1"})) >= 0.5);
}

TEST_CASE("window metric is symmetric and separates classes") {
  const auto cat = silver("3");
  for (const auto& p : cat.classes) {
    for (const auto& q : cat.classes) {
      const double d = chabauty_distance(p, q);
      CHECK(d == chabauty_distance(q, p));
      CHECK((d == 0.0) == (p == q));
      CHECK(d <= 1.0);
      for (const auto& r : cat.classes) CHECK(chabauty_distance(p, r) <= d + chabauty_distance(q, r) + 1e-12);
    }
  }
}

TEST_CASE("convergence of translates") {
  const auto z = presets::integer_lattice(1);
  const auto view = Window::ball(1, 6);
  const auto limit = enumerate_window(z, view);
  std::vector<PointSample> seq;
  QuadraticScalar t(1);
  for (int k = 0; k < 8; ++k, t /= QuadraticScalar(10)) seq.push_back(left_translate_points(z, g1(-t), view));
  CHECK(check_convergence(seq, limit, 5, 1e-6).pass);

  const std::vector<PointSample> constant(3, limit);
  CHECK(check_convergence(constant, limit, 5, 1e-6).pass);

  const std::vector<PointSample> half(3, left_translate_points(z, g1(S("1/2")), view));
  const auto v = check_convergence(half, limit, 5, 1e-6);
  CHECK_FALSE(v.pass);
  CHECK_FALSE(v.condition2);
  CHECK(std::any_of(v.failures.begin(), v.failures.end(), [](const ConvergenceWitness& w) { return w.condition == 2; }));
  CHECK_THROWS_AS(check_convergence({limit}, limit, 5, 1e-6), DomainError);
  CHECK_THROWS_AS(check_convergence(constant, limit, 7, 1e-6), BudgetError);
}

TEST_CASE("clopen classes") {
  const auto zp = patch1("2", {"-2", "-1", "0", "1", "2"});
  // Least left translate of {-1,0,1}.
  CHECK(classify_clopen(zp, Window::ball(1, 1)).representative == std::vector<GroupElement>{g1(-2), g1(-1), g1(0)});
  const Region k(Window::ball(1, S("6/5")));
  const auto three = classify_clopen(patch1("6/5", {"-1", "0", "1"}), k);
  const auto right = classify_clopen(patch1("6/5", {"0", "1"}), k);
  const auto left = classify_clopen(patch1("6/5", {"-1", "0"}), k);
  CHECK(three != right);
  CHECK(left == right);
  const auto cat = silver("6/5");
  std::set<std::vector<GroupElement>> ids;
  for (const auto& p : cat.classes) ids.insert(classify_clopen(p, k).representative);
  CHECK(ids.size() == 2);
  CHECK_THROWS_AS(classify_clopen(zp, Window::ball(1, 3)), DomainError);
}

TEST_CASE("clopen classification partitions every catalog and respects restriction") {
  for (const char* r : {"1", "3/2", "2", "3"}) {
    const auto cat = silver(r);
    const auto smaller = S(r) / QuadraticScalar(2);
    const Region k(Window::ball(1, smaller));
    std::map<std::vector<GroupElement>, std::size_t> counts;
    for (const auto& p : cat.classes) {
      const auto id = classify_clopen(p, k);
      ++counts[id.representative];
      CHECK(id == classify_clopen(restrict_patch(p, smaller), k));
    }
    std::size_t total = 0;
    for (const auto& [rep, n] : counts) total += n;
    CHECK(total == cat.size());
  }
}

TEST_CASE("separating compact sets") {
  const auto p = patch1("3/2", {"0", "1"}), q = patch1("3/2", {"0", "sqrt(2)"});
  const auto w = separating_compact(p, q);
  CHECK(classify_clopen(w.swapped ? q : p, w.k) != classify_clopen(w.swapped ? p : q, w.k));
  const auto a = patch1("3/2", {"0", "1"}), b = patch1("3/2", {"-1", "0"});
  const auto v = separating_compact(a, b);
  CHECK_FALSE(v.k.contains(group_inv(v.x)));
  CHECK(classify_clopen(v.swapped ? b : a, v.k) != classify_clopen(v.swapped ? a : b, v.k));
  CHECK_THROWS_AS(separating_compact(p, p), DomainError);
}

TEST_CASE("every distinct pair of silver-mean classes is separated") {
  const auto cat = silver("3/2");
  for (std::size_t i = 0; i < cat.size(); ++i) {
    for (std::size_t j = 0; j < cat.size(); ++j) {
      if (i == j) continue;
      const auto& p = cat.classes[i];
      const auto& q = cat.classes[j];
      const auto w = separating_compact(p, q);
      const Patch& a = w.swapped ? q : p;
      std::vector<GroupElement> hit;
      for (const auto& g : a.points()) {
        if (w.k.contains(g)) hit.push_back(g);
      }
      std::vector<GroupElement> expect{a.identity(), w.x};
      std::sort(expect.begin(), expect.end());
      CHECK(hit == expect);
      CHECK_FALSE(w.k.contains(group_inv(w.x)));
      CHECK(classify_clopen(p, w.k) != classify_clopen(q, w.k));
    }
  }
}
