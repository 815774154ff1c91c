#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "flc/quadratic.hpp"

namespace flc {

enum class GroupKind {
  abelian,     // R^n with coordinatewise addition
  heisenberg,  // upper unitriangular 3x3 matrices, coordinates (x, y, z)
};

std::string to_string(GroupKind kind);
GroupKind group_kind_from_string(const std::string& name);

/// Element of the ambient group with exact coordinates.
///
/// Heisenberg coordinates (x, y, z) stand for the matrix [[1,x,z],[0,1,y],[0,0,1]],
/// so (x1,y1,z1)(x2,y2,z2) = (x1+x2, y1+y2, z1+z2+x1*y2).
class GroupElement {
 public:
  GroupElement() = default;
  GroupElement(GroupKind kind, std::vector<QuadraticScalar> coords);

  static GroupElement identity(GroupKind kind, std::size_t dim);
  static GroupElement abelian(std::vector<QuadraticScalar> coords);
  static GroupElement heisenberg(QuadraticScalar x, QuadraticScalar y, QuadraticScalar z);

  GroupKind kind() const { return kind_; }
  std::size_t dim() const { return coords_.size(); }
  const std::vector<QuadraticScalar>& coords() const { return coords_; }
  const QuadraticScalar& operator[](std::size_t i) const { return coords_[i]; }
  bool is_identity() const;
  std::vector<double> approx() const;
  std::string to_string() const;

  friend bool operator==(const GroupElement& a, const GroupElement& b) = default;
  /// Lexicographic in the coordinates (real order); kinds compared first.
  friend std::strong_ordering operator<=>(const GroupElement& a, const GroupElement& b);

 private:
  GroupKind kind_ = GroupKind::abelian;
  std::vector<QuadraticScalar> coords_;
};

/// Throws DomainError on variant or dimension mismatch.
GroupElement group_mul(const GroupElement& a, const GroupElement& b);
GroupElement group_inv(const GroupElement& a);
/// Applies p + q sqrt(d) -> p - q sqrt(d) to every coordinate.
GroupElement galois_conjugate(const GroupElement& g);
/// Sup of the coordinate absolute values.
QuadraticScalar sup_norm(const GroupElement& g);
/// sup_norm(g) <= r without building the norm.
bool within_radius(const GroupElement& g, const QuadraticScalar& r);
/// sup{ r : x^{-1} B_r is inside B_R }: the radius around the identity on which
/// x*P is known when P is known on B_R. Equals R - |x| for abelian groups; can
/// be negative.
QuadraticScalar inner_radius(const GroupElement& x, const QuadraticScalar& radius);

/// Axis-aligned coordinate box. `open` selects strict inequalities on every
/// bound. `symmetrized` additionally requires inv(g) to lie in the box, which
/// turns a Heisenberg box B into the symmetric set B ∩ B^{-1}.
struct Window {
  std::vector<QuadraticScalar> lo;
  std::vector<QuadraticScalar> hi;
  bool open = false;
  bool symmetrized = false;

  static Window box(std::vector<QuadraticScalar> lo, std::vector<QuadraticScalar> hi, bool open = false);
  /// [-r, r]^dim (or (-r, r)^dim when open).
  static Window ball(std::size_t dim, const QuadraticScalar& r, bool open = false);
  static Window point(const GroupElement& g);

  std::size_t dim() const { return lo.size(); }
  /// lo = -hi in every coordinate.
  bool is_coordinate_symmetric() const;
  /// Throws DomainError unless lo <= hi everywhere (lo < hi when open).
  void validate() const;
  std::string to_string() const;

  friend bool operator==(const Window&, const Window&) = default;
};

bool box_contains(const Window& w, const std::vector<QuadraticScalar>& coords);
/// Exact membership; honours `open` and `symmetrized`.
bool window_contains(const Window& w, const GroupElement& g);
/// Box inclusion a ⊆ b, ignoring the symmetrized flag of `a` (its box is a superset).
bool window_subset(const Window& a, const Window& b);
/// Closed boxes containing a·b, a^{-1}, a^{-1}·b and g·a. Exact for abelian
/// groups; interval hulls of the polynomial group law for Heisenberg.
Window product_hull(const Window& a, const Window& b, GroupKind kind);
Window inverse_hull(const Window& a, GroupKind kind);
Window difference_hull(const Window& a, const Window& b, GroupKind kind);
Window translate_hull(const GroupElement& g, const Window& a);
/// Exact test of g ∈ U^{-1}U. For Heisenberg U must be coordinate symmetric.
bool difference_set_contains(const Window& u, const GroupElement& g);

/// Finite union of boxes: the compact sets used by clopen classification.
struct Region {
  std::vector<Window> boxes;

  Region() = default;
  Region(Window w) : boxes{std::move(w)} {}  // NOLINT(google-explicit-constructor)
  explicit Region(std::vector<Window> ws) : boxes(std::move(ws)) {}

  bool contains(const GroupElement& g) const;
  friend bool operator==(const Region&, const Region&) = default;
};

}  // namespace flc
