#include "flc/group.hpp"

#include <algorithm>
#include <sstream>

#include "flc/error.hpp"

namespace flc {

std::string to_string(GroupKind kind) { return kind == GroupKind::abelian ? "abelian" : "heisenberg"; }

GroupKind group_kind_from_string(const std::string& name) {
  if (name == "abelian") return GroupKind::abelian;
  if (name == "heisenberg") return GroupKind::heisenberg;
  throw DomainError("unknown group kind '" + name + "'");
}

GroupElement::GroupElement(GroupKind kind, std::vector<QuadraticScalar> coords)
    : kind_(kind), coords_(std::move(coords)) {
  if (kind_ == GroupKind::heisenberg && coords_.size() != 3) {
    throw DomainError("Heisenberg elements have 3 coordinates");
  }
}

GroupElement GroupElement::identity(GroupKind kind, std::size_t dim) {
  return GroupElement(kind, std::vector<QuadraticScalar>(kind == GroupKind::heisenberg ? 3 : dim));
}

GroupElement GroupElement::abelian(std::vector<QuadraticScalar> coords) {
  return GroupElement(GroupKind::abelian, std::move(coords));
}

GroupElement GroupElement::heisenberg(QuadraticScalar x, QuadraticScalar y, QuadraticScalar z) {
  return GroupElement(GroupKind::heisenberg, {std::move(x), std::move(y), std::move(z)});
}

bool GroupElement::is_identity() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const QuadraticScalar& c) { return c.is_zero(); });
}

std::vector<double> GroupElement::approx() const {
  std::vector<double> out;
  out.reserve(coords_.size());
  for (const auto& c : coords_) out.push_back(c.to_double());
  return out;
}

std::string GroupElement::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ", ";
    s += coords_[i].to_string();
  }
  return s + ")";
}

std::strong_ordering operator<=>(const GroupElement& a, const GroupElement& b) {
  if (a.kind_ != b.kind_) return a.kind_ < b.kind_ ? std::strong_ordering::less : std::strong_ordering::greater;
  const std::size_t n = std::min(a.coords_.size(), b.coords_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = a.coords_[i] <=> b.coords_[i]; c != 0) return c;
  }
  return a.coords_.size() <=> b.coords_.size();
}

namespace {

void require_compatible(const GroupElement& a, const GroupElement& b) {
  if (a.kind() != b.kind()) throw DomainError("group variant mismatch");
  if (a.dim() != b.dim()) throw DomainError("group dimension mismatch");
}

}  // namespace

GroupElement group_mul(const GroupElement& a, const GroupElement& b) {
  require_compatible(a, b);
  std::vector<QuadraticScalar> c = a.coords();
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b[i];
  if (a.kind() == GroupKind::heisenberg) c[2] += a[0] * b[1];
  return GroupElement(a.kind(), std::move(c));
}

GroupElement group_inv(const GroupElement& a) {
  std::vector<QuadraticScalar> c;
  c.reserve(a.dim());
  for (const auto& x : a.coords()) c.push_back(-x);
  // (x,y,z)^{-1} = (-x, -y, xy - z)
  if (a.kind() == GroupKind::heisenberg) c[2] += a[0] * a[1];
  return GroupElement(a.kind(), std::move(c));
}

GroupElement galois_conjugate(const GroupElement& g) {
  std::vector<QuadraticScalar> c;
  c.reserve(g.dim());
  for (const auto& x : g.coords()) c.push_back(x.conjugate());
  return GroupElement(g.kind(), std::move(c));
}

QuadraticScalar sup_norm(const GroupElement& g) {
  QuadraticScalar m;
  for (const auto& x : g.coords()) m = max(m, abs(x));
  return m;
}

bool within_radius(const GroupElement& g, const QuadraticScalar& r) {
  const QuadraticScalar neg = -r;
  for (const auto& x : g.coords()) {
    if (r < x || x < neg) return false;
  }
  return true;
}

QuadraticScalar inner_radius(const GroupElement& x, const QuadraticScalar& radius) {
  if (x.kind() == GroupKind::abelian) return radius - sup_norm(x);
  const GroupElement w = group_inv(x);
  const QuadraticScalar a = abs(w[0]);
  QuadraticScalar r = min(radius - a, radius - abs(w[1]));
  return min(r, (radius - abs(w[2])) / (QuadraticScalar(1) + a));
}

// ---------------------------------------------------------------------------
// Windows

Window Window::box(std::vector<QuadraticScalar> lo, std::vector<QuadraticScalar> hi, bool open) {
  if (lo.size() != hi.size()) throw DomainError("window bound lists differ in length");
  Window w{std::move(lo), std::move(hi), open, false};
  w.validate();
  return w;
}

Window Window::ball(std::size_t dim, const QuadraticScalar& r, bool open) {
  if (scalar_sign(r) < 0) throw DomainError("negative radius");
  Window w;
  w.lo.assign(dim, -r);
  w.hi.assign(dim, r);
  w.open = open;
  return w;
}

Window Window::point(const GroupElement& g) {
  Window w;
  w.lo = g.coords();
  w.hi = g.coords();
  return w;
}

bool Window::is_coordinate_symmetric() const {
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (lo[i] != -hi[i]) return false;
  }
  return true;
}

void Window::validate() const {
  if (lo.size() != hi.size()) throw DomainError("window bound lists differ in length");
  for (std::size_t i = 0; i < lo.size(); ++i) {
    const bool bad = open ? !(lo[i] < hi[i]) : hi[i] < lo[i];
    if (bad) throw DomainError("empty window: min " + lo[i].to_string() + " > max " + hi[i].to_string());
  }
}

std::string Window::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (i) os << " x ";
    os << (open ? "(" : "[") << lo[i] << ", " << hi[i] << (open ? ")" : "]");
  }
  if (symmetrized) os << " sym";
  return os.str();
}

bool box_contains(const Window& w, const std::vector<QuadraticScalar>& coords) {
  if (coords.size() != w.dim()) throw DomainError("window/point dimension mismatch");
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const int below = scalar_sign(coords[i] - w.lo[i]);
    const int above = scalar_sign(w.hi[i] - coords[i]);
    if (w.open ? (below <= 0 || above <= 0) : (below < 0 || above < 0)) return false;
  }
  return true;
}

bool window_contains(const Window& w, const GroupElement& g) {
  if (!box_contains(w, g.coords())) return false;
  if (w.symmetrized && g.kind() == GroupKind::heisenberg) return box_contains(w, group_inv(g).coords());
  return true;
}

bool window_subset(const Window& a, const Window& b) {
  if (a.dim() != b.dim()) throw DomainError("window dimension mismatch");
  for (std::size_t i = 0; i < a.dim(); ++i) {
    // b's bound must be strictly outside a's whenever b is open and a is closed.
    const bool strict = b.open && !a.open;
    const int lo = scalar_sign(a.lo[i] - b.lo[i]);
    const int hi = scalar_sign(b.hi[i] - a.hi[i]);
    if (strict ? (lo <= 0 || hi <= 0) : (lo < 0 || hi < 0)) return false;
  }
  return true;
}

namespace {

struct Interval {
  QuadraticScalar lo, hi;
};

Interval add(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }

Interval mul(const Interval& a, const Interval& b) {
  const QuadraticScalar c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  Interval r{c[0], c[0]};
  for (const auto& v : c) {
    r.lo = min(r.lo, v);
    r.hi = max(r.hi, v);
  }
  return r;
}

Interval neg(const Interval& a) { return {-a.hi, -a.lo}; }

Interval axis(const Window& w, std::size_t i) { return {w.lo[i], w.hi[i]}; }

Window from_intervals(const std::vector<Interval>& iv, bool open) {
  Window w;
  for (const auto& i : iv) {
    w.lo.push_back(i.lo);
    w.hi.push_back(i.hi);
  }
  w.open = open;
  return w;
}

}  // namespace

Window product_hull(const Window& a, const Window& b, GroupKind kind) {
  if (a.dim() != b.dim()) throw DomainError("window dimension mismatch");
  std::vector<Interval> out;
  for (std::size_t i = 0; i < a.dim(); ++i) out.push_back(add(axis(a, i), axis(b, i)));
  if (kind == GroupKind::heisenberg) out[2] = add(out[2], mul(axis(a, 0), axis(b, 1)));
  return from_intervals(out, a.open && b.open);
}

Window inverse_hull(const Window& a, GroupKind kind) {
  std::vector<Interval> out;
  for (std::size_t i = 0; i < a.dim(); ++i) out.push_back(neg(axis(a, i)));
  if (kind == GroupKind::heisenberg) out[2] = add(out[2], mul(axis(a, 0), axis(a, 1)));
  return from_intervals(out, a.open);
}

Window difference_hull(const Window& a, const Window& b, GroupKind kind) {
  return product_hull(inverse_hull(a, kind), b, kind);
}

Window translate_hull(const GroupElement& g, const Window& a) {
  Window p = Window::point(g);
  Window h = product_hull(p, a, g.kind());
  h.open = a.open && g.kind() == GroupKind::abelian;
  return h;
}

bool difference_set_contains(const Window& u, const GroupElement& g) {
  if (u.dim() != g.dim()) throw DomainError("window/point dimension mismatch");
  auto within = [&](const QuadraticScalar& v, const QuadraticScalar& bound) {
    const int s = scalar_sign(bound - v);
    return u.open ? s > 0 : s >= 0;
  };
  if (g.kind() == GroupKind::abelian) {
    for (std::size_t i = 0; i < g.dim(); ++i) {
      if (!within(g[i], u.hi[i] - u.lo[i]) || !within(u.lo[i] - u.hi[i], g[i])) return false;
    }
    return true;
  }
  if (!u.is_coordinate_symmetric()) throw DomainError("Heisenberg U^{-1}U test needs a coordinate-symmetric box");
  const QuadraticScalar& rx = u.hi[0];
  const QuadraticScalar& ry = u.hi[1];
  const QuadraticScalar two_rz = QuadraticScalar(2) * u.hi[2];
  const QuadraticScalar &X = g[0], &Y = g[1], &Z = g[2];
  // u1^{-1}u2 = (x2-x1, y2-y1, (z2-z1) - x1 (y2-y1)).
  if (!within(abs(X), QuadraticScalar(2) * rx) || !within(abs(Y), QuadraticScalar(2) * ry)) return false;
  // Admissible x1: [-rx, rx] ∩ [-rx - X, rx - X].
  const QuadraticScalar a = max(-rx, -rx - X);
  const QuadraticScalar b = min(rx, rx - X);
  if (Y.is_zero()) return within(abs(Z), two_rz);
  const QuadraticScalar lo = Z + min(a * Y, b * Y);
  const QuadraticScalar hi = Z + max(a * Y, b * Y);
  // {Z + x1 Y} meets the z-difference set (-2rz, 2rz).
  return within(lo, two_rz) && within(-two_rz, hi);
}

bool Region::contains(const GroupElement& g) const {
  return std::any_of(boxes.begin(), boxes.end(), [&](const Window& w) { return window_contains(w, g); });
}

}  // namespace flc
