#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace flc {

/// Exact element p + q*sqrt(d) of a real quadratic field Q(sqrt d).
///
/// d = 0 marks a value that is known to be rational and not yet tied to a
/// field; arithmetic adopts the nonzero d of the other operand. Combining two
/// values with different nonzero d is a DomainError. Equality and ordering are
/// exact and follow the real embedding.
class QuadraticScalar {
 public:
  QuadraticScalar() = default;
  QuadraticScalar(long v) : p_(v) {}  // NOLINT(google-explicit-constructor)
  QuadraticScalar(int v) : p_(v) {}   // NOLINT(google-explicit-constructor)
  explicit QuadraticScalar(mpq_class p) : p_(std::move(p)) { p_.canonicalize(); }
  QuadraticScalar(mpq_class p, mpq_class q, int d);

  static QuadraticScalar rational(long num, long den = 1);
  /// sqrt(d) itself.
  static QuadraticScalar root(int d);

  const mpq_class& p() const { return p_; }
  const mpq_class& q() const { return q_; }
  int d() const { return d_; }
  bool is_rational() const { return sgn(q_) == 0; }
  bool is_zero() const { return sgn(p_) == 0 && sgn(q_) == 0; }

  /// p - q*sqrt(d).
  QuadraticScalar conjugate() const;
  /// Field norm p^2 - d q^2 (rational).
  mpq_class norm() const;
  double to_double() const;
  /// "p", "q*sqrt(d)" or "p+q*sqrt(d)" with rationals written "a/b".
  std::string to_string() const;

  QuadraticScalar operator-() const;
  QuadraticScalar& operator+=(const QuadraticScalar& o);
  QuadraticScalar& operator-=(const QuadraticScalar& o);
  QuadraticScalar& operator*=(const QuadraticScalar& o);
  QuadraticScalar& operator/=(const QuadraticScalar& o);

  friend QuadraticScalar operator+(QuadraticScalar a, const QuadraticScalar& b) { return a += b; }
  friend QuadraticScalar operator-(QuadraticScalar a, const QuadraticScalar& b) { return a -= b; }
  friend QuadraticScalar operator*(QuadraticScalar a, const QuadraticScalar& b) { return a *= b; }
  friend QuadraticScalar operator/(QuadraticScalar a, const QuadraticScalar& b) { return a /= b; }

  friend bool operator==(const QuadraticScalar& a, const QuadraticScalar& b);
  friend std::strong_ordering operator<=>(const QuadraticScalar& a, const QuadraticScalar& b);

 private:
  int merged_d(const QuadraticScalar& o) const;

  mpq_class p_{0};
  mpq_class q_{0};
  int d_ = 0;
};

/// Sign of the real number p + q*sqrt(d), decided exactly.
int scalar_sign(const QuadraticScalar& s);

QuadraticScalar abs(const QuadraticScalar& s);
const QuadraticScalar& min(const QuadraticScalar& a, const QuadraticScalar& b);
const QuadraticScalar& max(const QuadraticScalar& a, const QuadraticScalar& b);

/// True for d >= 2 with no square factor.
bool is_squarefree(long d);

/// Parses "3/2", "-1", "sqrt(2)", "1+sqrt(2)", "3/2-1/2*sqrt(2)", "2*sqrt(3)".
/// Throws DomainError on malformed text.
QuadraticScalar parse_scalar(const std::string& text);

std::ostream& operator<<(std::ostream& os, const QuadraticScalar& s);

}  // namespace flc
