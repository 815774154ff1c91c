#include <doctest.h>

#include <random>

#include "flc/error.hpp"
#include "flc/group.hpp"
#include "oracles.hpp"

using namespace flc;

namespace {

QuadraticScalar S(const char* text) { return parse_scalar(text); }

QuadraticScalar random_scalar(std::mt19937_64& rng, int d = 2) {
  std::uniform_int_distribution<long> num(-20, 20), den(1, 6);
  return QuadraticScalar(mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng)), d);
}

GroupElement random_element(std::mt19937_64& rng, GroupKind kind, std::size_t dim) {
  std::vector<QuadraticScalar> c;
  for (std::size_t i = 0; i < dim; ++i) c.push_back(random_scalar(rng));
  return GroupElement(kind, c);
}

}  // namespace

TEST_CASE("scalar sign on the listed values") {
  CHECK(scalar_sign(QuadraticScalar(0, 0, 2)) == 0);
  CHECK(scalar_sign(QuadraticScalar(1, -1, 2)) == -1);
  CHECK(scalar_sign(QuadraticScalar(3, -2, 2)) == 1);
}

TEST_CASE("scalar sign agrees with 50-digit floats") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> v(-1000, 1000);
  for (int d : {2, 3, 5}) {
    for (int i = 0; i < 2000; ++i) {
      const long p = v(rng), q = v(rng);
      CHECK(scalar_sign(QuadraticScalar(p, q, d)) == oracle::sign(p, q, d));
    }
  }
  // Near-cancellations: convergents of sqrt2.
  for (auto [p, q] : {std::pair<long, long>{99, -70}, {577, -408}, {-3363, 2378}, {19601, -13860}}) {
    CHECK(scalar_sign(QuadraticScalar(p, q, 2)) == oracle::sign(p, q, 2));
  }
}

TEST_CASE("field laws hold exactly") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    const auto a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == QuadraticScalar(0));
    if (!b.is_zero()) CHECK((a / b) * b == a);
    CHECK((a * b).norm() == a.norm() * b.norm());
  }
}

TEST_CASE("Galois conjugation is a field automorphism") {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 300; ++i) {
    const auto a = random_scalar(rng), b = random_scalar(rng);
    CHECK((a + b).conjugate() == a.conjugate() + b.conjugate());
    CHECK((a * b).conjugate() == a.conjugate() * b.conjugate());
    CHECK(a.conjugate().conjugate() == a);
  }
  CHECK(S("1+sqrt(2)").conjugate() == S("1-sqrt(2)"));
  const auto v = GroupElement::abelian({3, 5});
  CHECK(galois_conjugate(v) == v);
  CHECK(galois_conjugate(GroupElement::abelian({S("1+sqrt(2)")})) == GroupElement::abelian({S("1-sqrt(2)")}));
}

TEST_CASE("scalars print and parse back") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const auto a = random_scalar(rng);
    CHECK(parse_scalar(a.to_string()) == a);
  }
  CHECK(S("3/2") == QuadraticScalar::rational(3, 2));
  CHECK_THROWS_AS(S("1.5"), DomainError);
  CHECK_THROWS_AS(S("1+sqrt(4)"), DomainError);
}

TEST_CASE("mixing quadratic fields is rejected") {
  CHECK_THROWS_AS(QuadraticScalar::root(2) + QuadraticScalar::root(3), DomainError);
  CHECK(QuadraticScalar::root(2) + QuadraticScalar(1) == S("1+sqrt(2)"));
}

TEST_CASE("group products on the listed values") {
  CHECK(group_mul(GroupElement::abelian({1, 0}), GroupElement::abelian({0, 1})) == GroupElement::abelian({1, 1}));
  const auto a = GroupElement::heisenberg(1, 0, 0), b = GroupElement::heisenberg(0, 1, 0);
  CHECK(group_mul(a, b) == GroupElement::heisenberg(1, 1, 1));
  CHECK(group_mul(b, a) == GroupElement::heisenberg(1, 1, 0));
  CHECK(group_inv(GroupElement::heisenberg(2, 3, 5)) == GroupElement::heisenberg(-2, -3, 6 - 5));
  CHECK(group_inv(GroupElement::abelian({S("1+sqrt(2)")})) == GroupElement::abelian({S("-1-sqrt(2)")}));
  const auto e = GroupElement::identity(GroupKind::heisenberg, 3);
  CHECK(group_inv(e) == e);
}

TEST_CASE("group axioms on random triples") {
  std::mt19937_64 rng(9);
  for (auto [kind, dim] : {std::pair{GroupKind::abelian, std::size_t{2}}, std::pair{GroupKind::heisenberg, std::size_t{3}}}) {
    const auto e = GroupElement::identity(kind, dim);
    for (int i = 0; i < 1000; ++i) {
      const auto x = random_element(rng, kind, dim), y = random_element(rng, kind, dim), z = random_element(rng, kind, dim);
      CHECK(group_mul(group_mul(x, y), z) == group_mul(x, group_mul(y, z)));
      CHECK(group_mul(x, group_inv(x)) == e);
      CHECK(group_mul(group_inv(x), x) == e);
      CHECK(group_mul(x, e) == x);
      CHECK(group_mul(galois_conjugate(x), galois_conjugate(y)) == galois_conjugate(group_mul(x, y)));
    }
  }
}

TEST_CASE("dimension and variant mismatches throw") {
  CHECK_THROWS_AS(group_mul(GroupElement::abelian({1}), GroupElement::abelian({1, 2})), DomainError);
  CHECK_THROWS_AS(group_mul(GroupElement::abelian({1, 2, 3}), GroupElement::heisenberg(1, 2, 3)), DomainError);
}

TEST_CASE("window membership is exact") {
  const auto w = Window::ball(1, 1);
  CHECK(window_contains(w, GroupElement::abelian({S("1-sqrt(2)")})));
  CHECK_FALSE(window_contains(w, GroupElement::abelian({S("1+sqrt(2)")})));
  CHECK(window_contains(w, GroupElement::abelian({1})));
  CHECK_FALSE(window_contains(Window::ball(1, 1, true), GroupElement::abelian({1})));
  CHECK_THROWS_AS(Window::box({1}, {0}), DomainError);
}

TEST_CASE("within_radius matches the sup norm") {
  std::mt19937_64 rng(10);
  for (int i = 0; i < 500; ++i) {
    const auto g = random_element(rng, GroupKind::heisenberg, 3);
    const auto r = abs(random_scalar(rng));
    CHECK(within_radius(g, r) == (sup_norm(g) <= r));
  }
}

TEST_CASE("inner radius keeps x^{-1} B_r inside B_R") {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<long> coord(-3, 3);
  for (int i = 0; i < 200; ++i) {
    const auto x = GroupElement::heisenberg(QuadraticScalar::rational(coord(rng), 2), QuadraticScalar::rational(coord(rng), 2),
                                            QuadraticScalar::rational(coord(rng), 2));
    const QuadraticScalar big(4);
    const auto r = inner_radius(x, big);
    if (r < QuadraticScalar(0)) continue;
    // Corners and a grid of B_r stay inside B_R after left multiplication by x^{-1}.
    for (long a = -2; a <= 2; ++a) {
      for (long b = -2; b <= 2; ++b) {
        for (long c = -2; c <= 2; ++c) {
          const auto g = GroupElement::heisenberg(r * QuadraticScalar::rational(a, 2), r * QuadraticScalar::rational(b, 2),
                                                  r * QuadraticScalar::rational(c, 2));
          CHECK(within_radius(group_mul(group_inv(x), g), big));
        }
      }
    }
  }
}

TEST_CASE("difference set membership matches a direct search") {
  const auto u = Window::ball(1, QuadraticScalar::rational(1, 2), true);
  CHECK(difference_set_contains(u, GroupElement::abelian({QuadraticScalar::rational(1, 4)})));
  CHECK(difference_set_contains(u, GroupElement::abelian({QuadraticScalar::rational(99, 100)})));
  CHECK_FALSE(difference_set_contains(u, GroupElement::abelian({1})));
  const Region k(std::vector<Window>{Window::ball(1, QuadraticScalar::rational(1, 10)),
                                     Window::box({QuadraticScalar::rational(9, 10)}, {QuadraticScalar::rational(11, 10)})});
  CHECK(k.contains(GroupElement::abelian({1})));
  CHECK_FALSE(k.contains(GroupElement::abelian({QuadraticScalar::rational(1, 2)})));
}
