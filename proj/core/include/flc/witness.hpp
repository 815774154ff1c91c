#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "flc/groupoid.hpp"

namespace flc {

/// ψ((x,P),(y,Q)) = δ_e(x^{-1}y): 1 iff x = y exactly.
int psi(const Arrow& a, const Arrow& b);

using BinaryMatrix = std::vector<std::vector<int>>;

struct WitnessMatrix {
  std::size_t n = 0;
  /// entries[i][j] = δ_e(x_j^{-1} x_i y_i^{-1} y_j).
  BinaryMatrix entries;
  std::shared_ptr<const Patch> p;
  std::shared_ptr<const Patch> q;
  std::vector<GroupElement> xs;
  std::vector<GroupElement> ys;
};

/// Throws DomainError unless |xs| = |ys| and every x_i ∈ P, y_i ∈ Q.
WitnessMatrix build_matrix(const Patch& p, const std::vector<GroupElement>& xs, const Patch& q,
                           const std::vector<GroupElement>& ys);

struct PsdCertificate {
  bool diagonal = false;
  bool symmetric = false;
  bool transitive = false;
  /// Blocks of the relation M_ij = 1, in order of first index.
  std::vector<std::vector<std::size_t>> blocks;
  bool blocks_all_ones = false;
  bool cross_blocks_zero = false;
  /// PSD follows exactly from the block structure.
  bool exact_psd = false;
  double min_eigenvalue = 0.0;
  bool float_psd = false;
  bool pass = false;
  std::string counterexample;
};

constexpr double kEigenTolerance = 1e-9;

PsdCertificate certify_positive_type(const BinaryMatrix& m);
PsdCertificate certify_positive_type(const WitnessMatrix& m);

/// γ_i = (x_i, x_i^{-1}P), all with range P. Throws BudgetError when the
/// translated patches leave too little radius.
std::vector<Arrow> witness_arrows(const Patch& p, const std::vector<GroupElement>& xs);

struct PositiveTypeVerdict {
  std::vector<std::vector<double>> matrix;
  bool symmetric = false;
  double min_eigenvalue = 0.0;
  bool positive = false;
  /// Present when every entry is 0 or 1; then `agrees` compares both routes.
  std::optional<PsdCertificate> exact;
  bool agrees = true;
};

using ArrowPairFunction = std::function<double(const Arrow&, const Arrow&)>;

/// Gram-type matrix F_ij = f(γ_i^{-1}γ_j, η_i^{-1}η_j) formed with groupoid
/// operations, checked for symmetry and float PSD. The γ_i must share their
/// range, and so must the η_i (DomainError otherwise).
PositiveTypeVerdict generic_positive_type_check(const ArrowPairFunction& f, const std::vector<Arrow>& gammas,
                                                const std::vector<Arrow>& etas);

struct ProperSupportVerdict {
  Window c;
  std::size_t pairs = 0;
  std::size_t supported = 0;
  std::size_t inside = 0;
  std::size_t outside = 0;
  std::size_t violations = 0;
  std::vector<std::string> findings;
  bool pass = false;
};

/// On `n_pairs` seeded pairs (half of them sharing x) checks ψ(a,b) ≠ 0 ⟹
/// x_a = x_b, hence x_a ∈ C ⟹ x_b ∈ C.
ProperSupportVerdict check_proper_support(const std::vector<Arrow>& arrows, const Window& c, std::size_t n_pairs,
                                          std::uint64_t seed);

struct XDiscreteness {
  Window k;
  std::size_t points = 0;
  /// Least |p| over p ∈ X_R \ {e}; empty when X_R = {e}.
  std::optional<QuadraticScalar> min_sep;
  /// Least |p^{-1}q| over distinct p, q ∈ X_R.
  std::optional<QuadraticScalar> min_pairwise_separation;
  /// |X_R ∩ K| and |⋃_F ⋃_{h ∈ F^{-1}} hF|.
  std::size_t covered = 0;
  std::size_t cover_bound = 0;
  bool covering = false;
  bool pass = false;
};

/// X_R = union of the class point sets, with K = B_R.
XDiscreteness check_X_discreteness(const PatchCatalog& cat);

/// Random witness instance of size 1..max_n over catalog classes. About half
/// the rows use y_i = h x_i for a shared h, which produces nontrivial blocks.
WitnessMatrix random_witness_instance(const PatchCatalog& cat, std::size_t max_n, std::mt19937_64& rng);

struct InnerAmenabilityParams {
  QuadraticScalar radius = 3;
  QuadraticScalar arrow_radius = 1;
  Window sample;
  Window k;
  double eps = 1e-6;
  std::size_t samples = 200;
  std::size_t support_pairs = 2000;
  std::size_t max_n = 8;
  std::uint64_t seed = 1;
};

struct InnerAmenabilityReport {
  std::string descriptor;
  InnerAmenabilityParams params;
  std::size_t catalog_classes = 0;
  std::size_t arrows = 0;
  std::size_t diagonal_checked = 0;
  std::size_t diagonal_violations = 0;
  ProperSupportVerdict proper_support;
  std::size_t positive_type_n = 0;
  std::size_t positive_type_failures = 0;
  double positive_type_min_eigenvalue = 0.0;
  XDiscreteness x_discreteness;
  bool pass = false;
};

InnerAmenabilityReport inner_amenability_report(const PointSetDescriptor& desc, const InnerAmenabilityParams& params);

}  // namespace flc
