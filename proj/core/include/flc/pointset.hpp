#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "flc/group.hpp"

namespace flc {

/// Coordinate matrix: rows are coordinates, columns are images of the integer
/// basis vectors of the parameter lattice.
using CoordinateMatrix = std::vector<std::vector<QuadraticScalar>>;

/// Union of cosets offset + span_Z(basis). For Heisenberg the span is taken in
/// coordinates and must be closed under the group law; only the identity
/// offset is allowed there.
struct LatticeData {
  std::vector<GroupElement> basis;
  std::vector<GroupElement> offsets;
};

/// Cut-and-project set { phys(t) : t ∈ Z^rank, int(t) ∈ window }.
struct ModelSetData {
  CoordinateMatrix phys_map;
  CoordinateMatrix int_map;
  GroupKind internal_kind = GroupKind::abelian;
  Window window;
};

/// Finite data defining a point set Λ in G.
class PointSetDescriptor {
 public:
  static PointSetDescriptor lattice(std::string label, GroupKind kind, std::vector<GroupElement> basis,
                                    std::vector<GroupElement> offsets = {});
  /// The window must be a coordinate-symmetric box around the identity of H.
  static PointSetDescriptor model_set(std::string label, GroupKind kind, CoordinateMatrix phys_map,
                                      CoordinateMatrix int_map, GroupKind internal_kind, Window window);

  const std::string& label() const { return label_; }
  GroupKind kind() const { return kind_; }
  std::size_t dim() const { return dim_; }
  bool is_lattice() const { return std::holds_alternative<LatticeData>(data_); }
  const LatticeData& lattice_data() const { return std::get<LatticeData>(data_); }
  const ModelSetData& model_set_data() const { return std::get<ModelSetData>(data_); }
  GroupElement identity() const { return GroupElement::identity(kind_, dim_); }

 private:
  PointSetDescriptor() = default;

  std::string label_;
  GroupKind kind_ = GroupKind::abelian;
  std::size_t dim_ = 0;
  std::variant<LatticeData, ModelSetData> data_;
};

/// Λ ∩ window, sorted and duplicate free.
struct PointSample {
  Window window;
  std::vector<GroupElement> points;
};

/// Exactly Λ ∩ K. Parameter ranges are over-approximated in floating point
/// and every candidate is then decided exactly. Throws BudgetError if the
/// parameter box is too large to scan, DomainError if a model set's physical
/// projection collides on enumerated points.
PointSample enumerate_window(const PointSetDescriptor& desc, const Window& k);

/// (gΛ) ∩ K.
PointSample left_translate_points(const PointSetDescriptor& desc, const GroupElement& g, const Window& k);

/// A point set containing Λ^{-1}Λ: the model set with window W^{-1}W (box
/// hull for Heisenberg), or the lattice with offsets o_i^{-1} o_j.
PointSetDescriptor difference_carrier(const PointSetDescriptor& desc);

/// difference_carrier(desc) ∩ K.
PointSample difference_sample(const PointSetDescriptor& desc, const Window& k);

/// Smallest sup-norm of a non-identity point, searching boxes of radius
/// 1, 2, 4, ... up to `max_radius`. Throws BudgetError if none is found.
QuadraticScalar identity_gap(const PointSetDescriptor& desc, const QuadraticScalar& max_radius = QuadraticScalar(1 << 12));

/// Integer coordinates of `target` in the Z-span of `basis` (exact linear
/// algebra over Q on the rational and irrational parts), if any.
std::optional<std::vector<mpz_class>> integer_coordinates(const std::vector<GroupElement>& basis,
                                                          const GroupElement& target);

}  // namespace flc
