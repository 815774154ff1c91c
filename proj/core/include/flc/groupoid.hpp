#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "flc/regularity.hpp"

namespace flc {

namespace detail {
class NeighborIndex;
}

/// Truncated arrow (x, P) of the point-set groupoid: x^{-1} ∈ P, with P known
/// on B_R. The budget is the radius on which the range xP is known.
class Arrow {
 public:
  /// Throws DomainError if x^{-1} ∉ P, BudgetError if the budget is negative.
  static Arrow make(GroupElement x, std::shared_ptr<const Patch> src);
  static Arrow make(GroupElement x, Patch src) { return make(std::move(x), std::make_shared<const Patch>(std::move(src))); }

  const GroupElement& x() const { return x_; }
  const Patch& src() const { return *src_; }
  const std::shared_ptr<const Patch>& src_ptr() const { return src_; }
  const QuadraticScalar& budget() const { return budget_; }
  /// xP on B_budget; computed on first use and shared by copies made afterwards.
  const std::shared_ptr<const Patch>& range_ptr() const;

 private:
  Arrow(GroupElement x, std::shared_ptr<const Patch> src, QuadraticScalar budget)
      : x_(std::move(x)), src_(std::move(src)), budget_(std::move(budget)) {}

  GroupElement x_;
  std::shared_ptr<const Patch> src_;
  QuadraticScalar budget_;
  mutable std::shared_ptr<const Patch> range_;
};

Arrow unit(std::shared_ptr<const Patch> p);
inline Arrow unit(const Patch& p) { return unit(std::make_shared<const Patch>(p)); }
const Patch& source(const Arrow& a);
/// xP on B_budget.
const Patch& range(const Arrow& a);
/// (x^{-1}, xP). Throws BudgetError if x lies outside B_budget.
Arrow inverse(const Arrow& a);

/// Equal x and equal source patches on their common radius.
bool same_arrow(const Arrow& a, const Arrow& b);
/// Equal on the common radius of the two patches.
bool agree(const Patch& p, const Patch& q);

enum class ComposeStatus {
  defined,
  undefined,  // provably non-composable: s(a2) and r(a1) differ
  unknown,    // the data is too shallow to decide or to carry the product
};

std::string to_string(ComposeStatus s);

struct ComposeResult {
  ComposeStatus status = ComposeStatus::unknown;
  std::optional<Arrow> arrow;
  std::string reason;
};

/// a2 ∘ a1 for a1 = (x, P), a2 = (y, xP): the arrow (yx, P).
ComposeResult compose(const Arrow& a2, const Arrow& a1);

/// All (x, P) with P a catalog class, x^{-1} ∈ P, |x| <= r and a non-negative
/// budget. Requires r <= catalog radius.
std::vector<Arrow> enumerate_arrows(const PatchCatalog& cat, const QuadraticScalar& r);

/// Draws genuinely composable pairs and triples from chains of anchors
/// λ0, λ1, ... in Λ: the arrow from λ to μ is (μ^{-1}λ, λ^{-1}Λ ∩ B_R).
class ArrowSampler {
 public:
  /// Anchors λ0 range over Λ ∩ sample; consecutive anchors satisfy |μ^{-1}λ| <= step.
  ArrowSampler(const PointSetDescriptor& desc, QuadraticScalar radius, QuadraticScalar step, const Window& sample);

  const std::shared_ptr<const Patch>& patch_at(const GroupElement& anchor) const;
  Arrow arrow(const GroupElement& from, const GroupElement& to) const;
  /// (γ, η) with s(γ) = r(η).
  std::pair<Arrow, Arrow> pair(std::mt19937_64& rng) const;
  /// (γ, η, μ) with s(γ) = r(η) and s(η) = r(μ).
  std::array<Arrow, 3> triple(std::mt19937_64& rng) const;

 private:
  std::vector<GroupElement> chain(std::size_t length, std::mt19937_64& rng) const;
  const std::vector<GroupElement>& steps_from(const GroupElement& anchor) const;

  GroupKind kind_;
  std::size_t dim_;
  QuadraticScalar radius_;
  QuadraticScalar step_;
  std::shared_ptr<const detail::NeighborIndex> pool_;
  std::vector<GroupElement> anchors_;
  mutable std::map<GroupElement, std::vector<GroupElement>> steps_;
  mutable std::map<GroupElement, std::shared_ptr<const Patch>> patches_;
};

struct AxiomReport {
  std::size_t pairs = 0;
  std::size_t triples = 0;
  /// r(γ) = γγ^{-1} and s(γ) = γ^{-1}γ.
  std::size_t range_source = 0;
  /// (γη)μ = γ(ημ).
  std::size_t associativity = 0;
  /// (γ^{-1})^{-1} = γ.
  std::size_t double_inverse = 0;
  /// r(γ)γ = γ s(γ) = γ.
  std::size_t unit_laws = 0;
  /// s(γη) = s(η), r(γη) = r(γ) and x^{-1} ∈ P for the product.
  std::size_t products = 0;
  std::size_t skipped_unknown = 0;
  std::size_t violations = 0;
  std::vector<std::string> findings;

  std::size_t verified() const { return range_source + associativity + double_inverse + unit_laws + products; }
};

AxiomReport check_axioms(const std::vector<std::pair<Arrow, Arrow>>& pairs,
                         const std::vector<std::array<Arrow, 3>>& triples);

struct Bisection {
  GroupElement center;
  Window v;
  std::vector<std::size_t> w_classes;
  std::vector<Arrow> arrows;
  std::vector<std::size_t> arrow_class;
  bool source_injective = false;
  /// Every pair of ranges is provably different as a hull point.
  bool range_injective = false;
};

/// Arrows (x', P) with x' ∈ xV ∩ Vx and P among `w_classes` of the catalog.
/// Requires V coordinate-symmetric and the box hull of VV inside u0.
Bisection build_bisection(const GroupElement& x, const Window& v, const std::vector<std::size_t>& w_classes,
                          const PatchCatalog& cat, const Window& u0);

/// True when xP ≠ x'P' is certified on the available data.
bool ranges_differ(const Arrow& a, const Arrow& b);

struct BisectionSurvey {
  std::size_t samples = 0;
  std::size_t arrows = 0;
  std::size_t source_violations = 0;
  std::size_t range_violations = 0;
  std::vector<std::string> findings;
  bool pass = false;
};

/// Builds `n` bisections for seeded triples (x, V, W): x^{-1} a catalog point
/// with |x| <= R/2, V an open ball with VV inside u0, W a nonempty class subset.
BisectionSurvey survey_bisections(const PatchCatalog& cat, const Window& u0, std::size_t n, std::mt19937_64& rng);

}  // namespace flc
