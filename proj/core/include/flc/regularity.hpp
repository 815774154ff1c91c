#pragma once

#include <optional>
#include <vector>

#include "flc/pointset.hpp"

namespace flc {

/// Finite anchored snapshot of an element of the discrete hull: a point set
/// inside the closed radius box that contains the identity.
class Patch {
 public:
  /// Sorts and dedupes; throws DomainError if the identity is missing or a
  /// point lies outside [-radius, radius]^n.
  Patch(QuadraticScalar radius, std::vector<GroupElement> points);

  const QuadraticScalar& radius() const { return radius_; }
  const std::vector<GroupElement>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  GroupKind kind() const { return points_.front().kind(); }
  std::size_t dim() const { return points_.front().dim(); }
  GroupElement identity() const { return GroupElement::identity(kind(), dim()); }
  bool contains(const GroupElement& g) const;

  friend bool operator==(const Patch&, const Patch&) = default;

 private:
  QuadraticScalar radius_;
  std::vector<GroupElement> points_;
};

/// The distinct anchored radius-R patches λ^{-1}Λ ∩ B_R seen from anchors
/// λ ∈ Λ ∩ S, with multiplicities.
struct PatchCatalog {
  QuadraticScalar radius;
  Window sample_window;
  std::vector<Patch> classes;
  std::vector<std::size_t> multiplicity;
  /// First anchor (in sorted order) realising each class.
  std::vector<GroupElement> anchors;

  std::size_t size() const { return classes.size(); }
  std::optional<std::size_t> find(const Patch& p) const;
};

struct UdCounterexample {
  GroupElement anchor;  // λ
  GroupElement first;   // always the identity of λ^{-1}Λ
  GroupElement second;  // a point of λ^{-1}Λ with first^{-1} second ∈ U^{-1}U
};

/// Window-scale certificate: only anchors inside `sample` were examined.
struct UdVerdict {
  bool pass = false;
  Window u;
  Window sample;
  std::size_t anchors_checked = 0;
  std::optional<UdCounterexample> counterexample;
};

/// Checks that no translate gΛ meets U in two points, for translates seen
/// from anchors λ ∈ Λ ∩ S: equivalently λ^{-1}Λ ∩ U^{-1}U = {e}. Anchors are
/// visited nearest-to-identity first, so the reported counterexample is the
/// one closest to e. U must be a coordinate-symmetric box containing e.
UdVerdict check_uniformly_discrete(const PointSetDescriptor& desc, const Window& u, const Window& sample);

struct FlcVerdict {
  bool pass = false;
  /// Half the identity gap of the difference carrier; Λ is U-discrete.
  Window u;
  QuadraticScalar carrier_identity_gap;
  /// Half the minimal separation inside the carrier; the carrier (which
  /// contains Λ^{-1}Λ) is carrier_u-discrete.
  Window carrier_u;
  QuadraticScalar carrier_separation;
  UdVerdict point_set;
  UdVerdict carrier;
  /// Every difference λ^{-1}μ (λ ∈ Λ ∩ S, |λ^{-1}μ| <= closure_radius) lies in the carrier.
  bool translate_closure = false;
  QuadraticScalar closure_radius;
  std::optional<GroupElement> closure_violation;
};

/// Window-scale finite-local-complexity certificate through Λ^{-1}Λ ⊆ carrier
/// and uniform discreteness of the carrier.
FlcVerdict check_flc(const PointSetDescriptor& desc, const Window& sample);

/// Largest open box (-r, r)^n with D ∩ U^{-1}U = {e}, starting from half of
/// D's identity gap and halving until the exact check holds.
Window discreteness_window(const PointSetDescriptor& carrier, QuadraticScalar* gap = nullptr);

/// Patch catalog at radius R >= 0 over anchors in S.
PatchCatalog enumerate_patches(const PointSetDescriptor& desc, const QuadraticScalar& radius, const Window& sample);

}  // namespace flc
