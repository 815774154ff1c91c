#include "flc/quadratic.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

#include "flc/error.hpp"

namespace flc {

bool is_squarefree(long d) {
  if (d < 2) return false;
  for (long f = 2; f * f <= d; ++f) {
    if (d % (f * f) == 0) return false;
  }
  return true;
}

QuadraticScalar::QuadraticScalar(mpq_class p, mpq_class q, int d)
    : p_(std::move(p)), q_(std::move(q)), d_(d) {
  p_.canonicalize();
  q_.canonicalize();
  if (d_ != 0 && !is_squarefree(d_)) {
    throw DomainError("quadratic field parameter d=" + std::to_string(d_) + " is not squarefree >= 2");
  }
  if (sgn(q_) != 0 && d_ == 0) {
    throw DomainError("irrational part requires a field parameter d");
  }
}

QuadraticScalar QuadraticScalar::rational(long num, long den) {
  if (den == 0) throw DomainError("zero denominator");
  mpq_class v(num, den);
  v.canonicalize();
  return QuadraticScalar(v);
}

QuadraticScalar QuadraticScalar::root(int d) { return QuadraticScalar(0, 1, d); }

int QuadraticScalar::merged_d(const QuadraticScalar& o) const {
  if (d_ != 0 && o.d_ != 0 && d_ != o.d_) {
    throw DomainError("mixing Q(sqrt " + std::to_string(d_) + ") and Q(sqrt " + std::to_string(o.d_) + ")");
  }
  return d_ != 0 ? d_ : o.d_;
}

QuadraticScalar QuadraticScalar::conjugate() const {
  QuadraticScalar r = *this;
  r.q_ = -r.q_;
  return r;
}

mpq_class QuadraticScalar::norm() const {
  mpq_class n = p_ * p_ - mpq_class(d_) * q_ * q_;
  return n;
}

double QuadraticScalar::to_double() const {
  if (sgn(q_) == 0) return p_.get_d();
  return p_.get_d() + q_.get_d() * std::sqrt(static_cast<double>(d_));
}

std::string QuadraticScalar::to_string() const {
  if (sgn(q_) == 0) return p_.get_str();
  std::string irr;
  if (q_ == 1) {
    irr = "sqrt(" + std::to_string(d_) + ")";
  } else if (q_ == -1) {
    irr = "-sqrt(" + std::to_string(d_) + ")";
  } else {
    irr = q_.get_str() + "*sqrt(" + std::to_string(d_) + ")";
  }
  if (sgn(p_) == 0) return irr;
  return p_.get_str() + (sgn(q_) > 0 ? "+" : "") + irr;
}

QuadraticScalar QuadraticScalar::operator-() const {
  QuadraticScalar r = *this;
  r.p_ = -r.p_;
  r.q_ = -r.q_;
  return r;
}

QuadraticScalar& QuadraticScalar::operator+=(const QuadraticScalar& o) {
  d_ = merged_d(o);
  p_ += o.p_;
  q_ += o.q_;
  return *this;
}

QuadraticScalar& QuadraticScalar::operator-=(const QuadraticScalar& o) {
  d_ = merged_d(o);
  p_ -= o.p_;
  q_ -= o.q_;
  return *this;
}

QuadraticScalar& QuadraticScalar::operator*=(const QuadraticScalar& o) {
  const int d = merged_d(o);
  if (sgn(q_) == 0 && sgn(o.q_) == 0) {
    p_ *= o.p_;
  } else {
    mpq_class np = p_ * o.p_ + mpq_class(d) * q_ * o.q_;
    mpq_class nq = p_ * o.q_ + q_ * o.p_;
    p_ = std::move(np);
    q_ = std::move(nq);
  }
  d_ = d;
  return *this;
}

QuadraticScalar& QuadraticScalar::operator/=(const QuadraticScalar& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  const int d = merged_d(o);
  if (sgn(o.q_) == 0) {
    p_ /= o.p_;
    q_ /= o.p_;
  } else {
    // a / b = a * conj(b) / N(b)
    const mpq_class n = o.norm();
    *this *= o.conjugate();
    p_ /= n;
    q_ /= n;
  }
  d_ = d;
  return *this;
}

bool operator==(const QuadraticScalar& a, const QuadraticScalar& b) {
  if (a.p_ != b.p_ || a.q_ != b.q_) return false;
  if (sgn(a.q_) == 0) return true;
  return a.d_ == b.d_;
}

std::strong_ordering operator<=>(const QuadraticScalar& a, const QuadraticScalar& b) {
  if (a.q_ == b.q_ && (sgn(a.q_) == 0 || a.d_ == b.d_)) {
    const int c = cmp(a.p_, b.p_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }
  // Float approximations are good to ~1e-15 relative; only near-ties need exact work.
  const double da = a.to_double(), db = b.to_double();
  if (std::isfinite(da) && std::isfinite(db) && std::abs(da - db) > 1e-9 * (1.0 + std::abs(da) + std::abs(db))) {
    return da < db ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  const int s = scalar_sign(a - b);
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

int scalar_sign(const QuadraticScalar& s) {
  const int sp = sgn(s.p());
  const int sq = sgn(s.q());
  if (sq == 0) return sp;
  if (sp == 0 || sp == sq) return sq;
  // Opposite signs: the larger of p^2 and d q^2 wins.
  const mpq_class lhs = s.p() * s.p();
  const mpq_class rhs = mpq_class(s.d()) * s.q() * s.q();
  const int c = cmp(lhs, rhs);
  if (c > 0) return sp;
  if (c < 0) return sq;
  return 0;
}

QuadraticScalar abs(const QuadraticScalar& s) { return scalar_sign(s) < 0 ? -s : s; }

const QuadraticScalar& min(const QuadraticScalar& a, const QuadraticScalar& b) { return b < a ? b : a; }
const QuadraticScalar& max(const QuadraticScalar& a, const QuadraticScalar& b) { return a < b ? b : a; }

namespace {

class ScalarParser {
 public:
  explicit ScalarParser(const std::string& text) : text_(text) {}

  QuadraticScalar parse() {
    skip_ws();
    if (pos_ == text_.size()) fail("empty scalar");
    QuadraticScalar acc;
    bool first = true;
    while (true) {
      skip_ws();
      if (pos_ == text_.size()) break;
      int sign = 1;
      if (text_[pos_] == '+' || text_[pos_] == '-') {
        sign = text_[pos_] == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      QuadraticScalar term = parse_term();
      acc += sign > 0 ? term : -term;
      first = false;
    }
    return acc;
  }

 private:
  QuadraticScalar parse_term() {
    skip_ws();
    if (peek_sqrt()) return parse_sqrt();
    mpq_class coeff = parse_rational();
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '*') {
      ++pos_;
      skip_ws();
      if (!peek_sqrt()) fail("expected sqrt(d) after '*'");
      QuadraticScalar r = parse_sqrt();
      return QuadraticScalar(coeff) * r;
    }
    return QuadraticScalar(coeff);
  }

  bool peek_sqrt() const { return text_.compare(pos_, 4, "sqrt") == 0; }

  QuadraticScalar parse_sqrt() {
    pos_ += 4;
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != '(') fail("expected '('");
    ++pos_;
    const std::string digits = take_digits();
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
    ++pos_;
    const long d = std::stol(digits);
    if (!is_squarefree(d)) fail("sqrt argument must be squarefree >= 2");
    return QuadraticScalar::root(static_cast<int>(d));
  }

  mpq_class parse_rational() {
    std::string num = take_digits();
    skip_ws();
    std::string den = "1";
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      skip_ws();
      den = take_digits();
    }
    mpq_class v{mpz_class(num), mpz_class(den)};
    if (v.get_den() == 0) fail("zero denominator");
    v.canonicalize();
    return v;
  }

  std::string take_digits() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return text_.substr(start, pos_ - start);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw DomainError("cannot parse scalar '" + text_ + "': " + what);
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

QuadraticScalar parse_scalar(const std::string& text) { return ScalarParser(text).parse(); }

std::ostream& operator<<(std::ostream& os, const QuadraticScalar& s) { return os << s.to_string(); }

}  // namespace flc
