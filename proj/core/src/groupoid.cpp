#include "flc/groupoid.hpp"

#include <algorithm>

#include "flc/error.hpp"
#include "neighbors.hpp"

namespace flc {

namespace {

std::vector<GroupElement> restricted(const Patch& p, const QuadraticScalar& c) {
  std::vector<GroupElement> out;
  for (const auto& g : p.points()) {
    if (within_radius(g, c)) out.push_back(g);
  }
  return out;
}

/// gP on B_c, assuming g^{-1}B_c ⊆ B_R(P).
std::vector<GroupElement> translated(const GroupElement& g, const Patch& p, const QuadraticScalar& c) {
  std::vector<GroupElement> out;
  for (const auto& q : p.points()) {
    GroupElement t = group_mul(g, q);
    if (within_radius(t, c)) out.push_back(std::move(t));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Arrow Arrow::make(GroupElement x, std::shared_ptr<const Patch> src) {
  if (!src) throw DomainError("arrow without unit patch");
  if (x.kind() != src->kind() || x.dim() != src->dim()) throw DomainError("arrow and patch live in different groups");
  if (!src->contains(group_inv(x))) throw DomainError("x^{-1} is not a point of the unit patch for x = " + x.to_string());
  QuadraticScalar budget = inner_radius(x, src->radius());
  if (scalar_sign(budget) < 0) throw BudgetError("arrow " + x.to_string() + " has no reliable range radius");
  return Arrow(std::move(x), std::move(src), std::move(budget));
}

const std::shared_ptr<const Patch>& Arrow::range_ptr() const {
  if (!range_) range_ = std::make_shared<const Patch>(budget_, translated(x_, *src_, budget_));
  return range_;
}

Arrow unit(std::shared_ptr<const Patch> p) {
  GroupElement e = p->identity();
  return Arrow::make(std::move(e), std::move(p));
}

const Patch& source(const Arrow& a) { return a.src(); }

const Patch& range(const Arrow& a) { return *a.range_ptr(); }

Arrow inverse(const Arrow& a) {
  if (!within_radius(a.x(), a.budget())) throw BudgetError("inverse of " + a.x().to_string() + ": budget exhausted");
  return Arrow::make(group_inv(a.x()), a.range_ptr());
}

bool agree(const Patch& p, const Patch& q) {
  if (p.radius() == q.radius()) return p.points() == q.points();
  if (q.radius() < p.radius()) return restricted(p, q.radius()) == q.points();
  return p.points() == restricted(q, p.radius());
}

bool same_arrow(const Arrow& a, const Arrow& b) { return a.x() == b.x() && agree(a.src(), b.src()); }

std::string to_string(ComposeStatus s) {
  switch (s) {
    case ComposeStatus::defined: return "defined";
    case ComposeStatus::undefined: return "undefined";
    case ComposeStatus::unknown: return "unknown";
  }
  return "?";
}

ComposeResult compose(const Arrow& a2, const Arrow& a1) {
  if (a1.x().kind() != a2.x().kind() || a1.x().dim() != a2.x().dim()) {
    throw DomainError("arrows live in different groups");
  }
  const Patch& r1 = range(a1);
  if (!agree(a2.src(), r1)) return {ComposeStatus::undefined, std::nullopt, "s(a2) and r(a1) differ on their common radius"};

  GroupElement z = group_mul(a2.x(), a1.x());
  const GroupElement zinv = group_inv(z);
  const Patch& p = a1.src();
  if (!within_radius(zinv, p.radius())) return {ComposeStatus::unknown, std::nullopt, "product leaves the source patch radius"};
  if (!p.contains(zinv)) return {ComposeStatus::undefined, std::nullopt, "y^{-1} is not a point of xP"};
  if (scalar_sign(inner_radius(z, p.radius())) < 0) return {ComposeStatus::unknown, std::nullopt, "product budget exhausted"};
  return {ComposeStatus::defined, Arrow::make(std::move(z), a1.src_ptr()), {}};
}

std::vector<Arrow> enumerate_arrows(const PatchCatalog& cat, const QuadraticScalar& r) {
  if (cat.radius < r) throw DomainError("arrow radius exceeds catalog radius");
  std::vector<Arrow> out;
  for (const auto& cls : cat.classes) {
    const auto shared = std::make_shared<const Patch>(cls);
    for (const auto& p : cls.points()) {
      GroupElement x = group_inv(p);
      if (!within_radius(x, r) || scalar_sign(inner_radius(x, cls.radius())) < 0) continue;
      out.push_back(Arrow::make(std::move(x), shared));
    }
  }
  return out;
}

ArrowSampler::ArrowSampler(const PointSetDescriptor& desc, QuadraticScalar radius, QuadraticScalar step,
                           const Window& sample)
    : kind_(desc.kind()), dim_(desc.dim()), radius_(std::move(radius)), step_(std::move(step)) {
  if (sample.dim() != dim_) throw DomainError("window dimension mismatch");
  const Window back = inverse_hull(Window::ball(dim_, step_), kind_);
  if (!window_subset(back, Window::ball(dim_, radius_))) throw DomainError("sampler step exceeds the patch radius");
  Window reach = sample;
  for (int i = 0; i < 3; ++i) reach = product_hull(reach, back, kind_);
  pool_ = std::make_shared<const detail::NeighborIndex>(
      enumerate_window(desc, product_hull(reach, Window::ball(dim_, radius_), kind_)).points);
  for (const auto& p : pool_->points()) {
    if (window_contains(sample, p)) anchors_.push_back(p);
  }
  if (anchors_.empty()) throw DomainError("no anchors in the sample window");
}

const std::shared_ptr<const Patch>& ArrowSampler::patch_at(const GroupElement& anchor) const {
  auto it = patches_.find(anchor);
  if (it != patches_.end()) return it->second;
  const Window ball = Window::ball(dim_, radius_);
  const GroupElement inv = group_inv(anchor);
  std::vector<GroupElement> pts;
  pool_->for_candidates_in(anchor, ball, [&](const GroupElement& mu) {
    GroupElement p = group_mul(inv, mu);
    if (window_contains(ball, p)) pts.push_back(std::move(p));
  });
  return patches_.emplace(anchor, std::make_shared<const Patch>(radius_, std::move(pts))).first->second;
}

const std::vector<GroupElement>& ArrowSampler::steps_from(const GroupElement& anchor) const {
  auto it = steps_.find(anchor);
  if (it != steps_.end()) return it->second;
  std::vector<GroupElement> out;
  for (const auto& p : patch_at(anchor)->points()) {
    GroupElement mu = group_mul(anchor, p);
    if (within_radius(group_mul(group_inv(mu), anchor), step_)) out.push_back(std::move(mu));
  }
  return steps_.emplace(anchor, std::move(out)).first->second;
}

Arrow ArrowSampler::arrow(const GroupElement& from, const GroupElement& to) const {
  return Arrow::make(group_mul(group_inv(to), from), patch_at(from));
}

std::vector<GroupElement> ArrowSampler::chain(std::size_t length, std::mt19937_64& rng) const {
  std::vector<GroupElement> out{anchors_[rng() % anchors_.size()]};
  while (out.size() < length) {
    const auto& next = steps_from(out.back());
    out.push_back(next[rng() % next.size()]);
  }
  return out;
}

std::pair<Arrow, Arrow> ArrowSampler::pair(std::mt19937_64& rng) const {
  const auto c = chain(3, rng);
  return {arrow(c[1], c[2]), arrow(c[0], c[1])};
}

std::array<Arrow, 3> ArrowSampler::triple(std::mt19937_64& rng) const {
  const auto c = chain(4, rng);
  return {arrow(c[2], c[3]), arrow(c[1], c[2]), arrow(c[0], c[1])};
}

namespace {

class AxiomChecker {
 public:
  explicit AxiomChecker(AxiomReport& report) : r_(report) {}

  /// Runs one identity; BudgetError and unknown products count as skipped.
  template <class F>
  void run(std::size_t& counter, const char* name, const Arrow& subject, F&& check) {
    try {
      const auto outcome = check();
      if (!outcome) {
        ++r_.skipped_unknown;
      } else if (*outcome) {
        ++counter;
      } else {
        ++r_.violations;
        r_.findings.push_back(std::string(name) + " fails at x = " + subject.x().to_string());
      }
    } catch (const BudgetError&) {
      ++r_.skipped_unknown;
    }
  }

  void single(const Arrow& g) {
    run(r_.range_source, "r(g) = g g^-1", g, [&]() -> std::optional<bool> {
      const auto c = compose(g, inverse(g));
      if (c.status == ComposeStatus::unknown) return std::nullopt;
      return c.arrow && c.arrow->x().is_identity() && agree(c.arrow->src(), range(g));
    });
    run(r_.range_source, "s(g) = g^-1 g", g, [&]() -> std::optional<bool> {
      const auto c = compose(inverse(g), g);
      if (c.status == ComposeStatus::unknown) return std::nullopt;
      return c.arrow && c.arrow->x().is_identity() && agree(c.arrow->src(), g.src());
    });
    run(r_.double_inverse, "(g^-1)^-1 = g", g, [&]() -> std::optional<bool> { return same_arrow(inverse(inverse(g)), g); });
    run(r_.unit_laws, "g s(g) = g", g, [&]() -> std::optional<bool> {
      const auto c = compose(g, unit(g.src_ptr()));
      if (c.status == ComposeStatus::unknown) return std::nullopt;
      return c.arrow && same_arrow(*c.arrow, g);
    });
    run(r_.unit_laws, "r(g) g = g", g, [&]() -> std::optional<bool> {
      const auto c = compose(unit(g.range_ptr()), g);
      if (c.status == ComposeStatus::unknown) return std::nullopt;
      return c.arrow && same_arrow(*c.arrow, g);
    });
  }

  void product(const Arrow& g, const Arrow& h) {
    run(r_.products, "s(gh) = s(h), r(gh) = r(g)", g, [&]() -> std::optional<bool> {
      const auto c = compose(g, h);
      if (c.status == ComposeStatus::unknown) return std::nullopt;
      if (!c.arrow) return false;
      single(*c.arrow);
      return agree(c.arrow->src(), h.src()) && agree(range(*c.arrow), range(g)) &&
             c.arrow->src().contains(group_inv(c.arrow->x()));
    });
  }

  void associativity(const Arrow& g, const Arrow& h, const Arrow& k) {
    run(r_.associativity, "(gh)k = g(hk)", g, [&]() -> std::optional<bool> {
      const auto gh = compose(g, h);
      const auto hk = compose(h, k);
      if (gh.status == ComposeStatus::undefined || hk.status == ComposeStatus::undefined) return false;
      if (!gh.arrow || !hk.arrow) return std::nullopt;
      const auto left = compose(*gh.arrow, k);
      const auto right = compose(g, *hk.arrow);
      if (left.status == ComposeStatus::undefined || right.status == ComposeStatus::undefined) return false;
      if (!left.arrow || !right.arrow) return std::nullopt;
      return same_arrow(*left.arrow, *right.arrow);
    });
  }

 private:
  AxiomReport& r_;
};

}  // namespace

AxiomReport check_axioms(const std::vector<std::pair<Arrow, Arrow>>& pairs,
                         const std::vector<std::array<Arrow, 3>>& triples) {
  AxiomReport report;
  AxiomChecker checker(report);
  for (const auto& [g, h] : pairs) {
    ++report.pairs;
    checker.single(g);
    checker.product(g, h);
  }
  for (const auto& [g, h, k] : triples) {
    ++report.triples;
    checker.associativity(g, h, k);
  }
  return report;
}

bool ranges_differ(const Arrow& a, const Arrow& b) {
  // xP = x'P' iff P' = gP with g = x'^{-1}x.
  const GroupElement g = group_mul(group_inv(b.x()), a.x());
  const QuadraticScalar c = min(b.src().radius(), inner_radius(g, a.src().radius()));
  if (scalar_sign(c) < 0) return false;
  return translated(g, a.src(), c) != restricted(b.src(), c);
}

Bisection build_bisection(const GroupElement& x, const Window& v, const std::vector<std::size_t>& w_classes,
                          const PatchCatalog& cat, const Window& u0) {
  if (cat.classes.empty()) throw DomainError("empty catalog");
  const GroupKind kind = cat.classes.front().kind();
  if (v.dim() != x.dim() || u0.dim() != x.dim()) throw DomainError("window dimension mismatch");
  v.validate();
  if (!v.is_coordinate_symmetric()) throw DomainError("V must be symmetric");
  if (!window_subset(product_hull(v, v, kind), u0)) throw DomainError("VV is not contained in U0");

  Bisection b{x, v, w_classes, {}, {}, true, true};
  const GroupElement xinv = group_inv(x);
  for (auto idx : w_classes) {
    if (idx >= cat.size()) throw DomainError("class index out of range");
    const Patch& cls = cat.classes[idx];
    const auto shared = std::make_shared<const Patch>(cls);
    for (const auto& p : cls.points()) {
      GroupElement y = group_inv(p);
      if (!window_contains(v, group_mul(xinv, y)) || !window_contains(v, group_mul(y, xinv))) continue;
      if (scalar_sign(inner_radius(y, cls.radius())) < 0) continue;
      b.arrows.push_back(Arrow::make(std::move(y), shared));
      b.arrow_class.push_back(idx);
    }
  }
  for (std::size_t i = 0; i < b.arrows.size(); ++i) {
    for (std::size_t j = i + 1; j < b.arrows.size(); ++j) {
      if (agree(b.arrows[i].src(), b.arrows[j].src())) b.source_injective = false;
      if (!ranges_differ(b.arrows[i], b.arrows[j])) b.range_injective = false;
    }
  }
  return b;
}

BisectionSurvey survey_bisections(const PatchCatalog& cat, const Window& u0, std::size_t n, std::mt19937_64& rng) {
  if (cat.classes.empty()) throw DomainError("empty catalog");
  const GroupKind kind = cat.classes.front().kind();
  const std::size_t dim = cat.classes.front().dim();
  if (!u0.is_coordinate_symmetric()) throw DomainError("U0 must be symmetric");

  std::vector<GroupElement> centers;
  const QuadraticScalar half = cat.radius / QuadraticScalar(2);
  for (const auto& cls : cat.classes) {
    for (const auto& p : cls.points()) {
      GroupElement x = group_inv(p);
      if (within_radius(x, half)) centers.push_back(std::move(x));
    }
  }
  std::sort(centers.begin(), centers.end());
  centers.erase(std::unique(centers.begin(), centers.end()), centers.end());

  QuadraticScalar m = u0.hi[0];
  for (const auto& h : u0.hi) m = min(m, h);

  BisectionSurvey s;
  for (std::size_t k = 0; k < n; ++k) {
    const GroupElement& x = centers[rng() % centers.size()];
    QuadraticScalar rho = m / QuadraticScalar(static_cast<long>(2 + rng() % 4));
    Window v = Window::ball(dim, rho, true);
    while (!window_subset(product_hull(v, v, kind), u0)) {
      rho /= QuadraticScalar(2);
      v = Window::ball(dim, rho, true);
    }
    std::vector<std::size_t> w;
    for (std::size_t c = 0; c < cat.size(); ++c) {
      if (rng() % 2 == 0) w.push_back(c);
    }
    if (w.empty()) w.push_back(rng() % cat.size());

    const Bisection b = build_bisection(x, v, w, cat, u0);
    ++s.samples;
    s.arrows += b.arrows.size();
    if (!b.source_injective) ++s.source_violations;
    if (!b.range_injective) ++s.range_violations;
    if ((!b.source_injective || !b.range_injective) && s.findings.size() < 10) {
      s.findings.push_back("bisection at x = " + x.to_string() + ", V = " + v.to_string() + " is not injective");
    }
  }
  s.pass = s.source_violations == 0 && s.range_violations == 0;
  return s;
}

}  // namespace flc
