#pragma once

#include <optional>
#include <vector>

#include "flc/regularity.hpp"

namespace flc {

/// P ∩ [-r, r]^n. Throws DomainError if r exceeds the patch radius.
Patch restrict_patch(const Patch& p, const QuadraticScalar& r);

/// Restriction map from a radius-R catalog to a radius-R' catalog (R' <= R).
struct RefinementMap {
  QuadraticScalar source_radius;
  QuadraticScalar target_radius;
  /// assignment[i] is the target class equal to source class i restricted to R'.
  std::vector<std::size_t> assignment;
};

/// Throws DomainError if R' > R, BudgetError if some restriction is missing
/// from the target catalog (the target was sampled too thinly).
RefinementMap build_refinement(const PatchCatalog& source, const PatchCatalog& target);

/// First followed by second: source of `first` to target of `second`.
RefinementMap compose_refinements(const RefinementMap& first, const RefinementMap& second);

/// Window metric d(P,Q) = inf{ε ∈ (0,1] : P ∩ B_{1/ε} ⊆ Q·B_ε and vice versa},
/// evaluated exactly on the finite data and rounded once at the end.
/// Distances between points are |p^{-1}q|. Equal radii required.
double chabauty_distance(const Patch& p, const Patch& q);

struct ConvergenceWitness {
  int condition = 0;  // 1: limit point not approximated; 2: stable sample point off the limit
  GroupElement point;
  /// Distance to the nearest point of the other set; negative when that set is empty.
  double distance = -1.0;
};

struct ConvergenceMatch {
  GroupElement limit_point;
  GroupElement sample_point;
  double distance = 0.0;
};

struct ConvergenceVerdict {
  bool pass = false;
  bool condition1 = false;
  bool condition2 = false;
  QuadraticScalar radius;
  double tol = 0.0;
  std::vector<ConvergenceMatch> matches;
  std::vector<ConvergenceWitness> failures;
};

/// Window-scale test of the two convergence conditions on B_R:
/// (1) every limit point is within tol of a point of the last sample;
/// (2) every point of the last sample that is tail-stable (within tol of a
///     point of the previous sample) is within tol of a limit point.
/// Needs at least two samples (DomainError), each covering B_R (BudgetError).
ConvergenceVerdict check_convergence(const std::vector<PointSample>& seq, const PointSample& limit,
                                     const QuadraticScalar& radius, double tol);

/// Class of P in the partition { A_{F,K} }: K ∩ P up to left translation,
/// normalised to the least f^{-1}(K ∩ P) over f ∈ K ∩ P.
struct ClopenClassId {
  Region k;
  std::vector<GroupElement> representative;

  friend bool operator==(const ClopenClassId&, const ClopenClassId&) = default;
};

/// Every box of K must lie inside B_R of the patch (DomainError otherwise).
ClopenClassId classify_clopen(const Patch& p, const Region& k);

struct SeparationWitness {
  Region k;
  GroupElement x;
  /// True when x was taken from Q \ P, i.e. the roles of P and Q were swapped.
  bool swapped = false;
  ClopenClassId class_p;
  ClopenClassId class_q;
};

/// Compact K with K ∩ P = {e, x}, x^{-1} ∉ K, and P, Q in different classes
/// over K. Both patches are first restricted to their common radius. Throws
/// DomainError if they agree there, BudgetError if no K inside it works.
SeparationWitness separating_compact(const Patch& p, const Patch& q);

}  // namespace flc
