#include "flc/witness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>

#include <Eigen/Eigenvalues>

#include "flc/error.hpp"
#include "flc/hull.hpp"

namespace flc {

int psi(const Arrow& a, const Arrow& b) { return a.x() == b.x() ? 1 : 0; }

WitnessMatrix build_matrix(const Patch& p, const std::vector<GroupElement>& xs, const Patch& q,
                           const std::vector<GroupElement>& ys) {
  if (xs.size() != ys.size()) throw DomainError("xs and ys differ in length");
  for (const auto& x : xs) {
    if (!p.contains(x)) throw DomainError("x = " + x.to_string() + " is not a point of P");
  }
  for (const auto& y : ys) {
    if (!q.contains(y)) throw DomainError("y = " + y.to_string() + " is not a point of Q");
  }
  const std::size_t n = xs.size();
  WitnessMatrix m{n, BinaryMatrix(n, std::vector<int>(n, 0)), std::make_shared<const Patch>(p),
                  std::make_shared<const Patch>(q), xs, ys};
  for (std::size_t i = 0; i < n; ++i) {
    const GroupElement xi_yi = group_mul(xs[i], group_inv(ys[i]));
    for (std::size_t j = 0; j < n; ++j) {
      // Factor order x_j^{-1} x_i y_i^{-1} y_j matters off the abelian case.
      m.entries[i][j] = group_mul(group_mul(group_inv(xs[j]), xi_yi), ys[j]).is_identity() ? 1 : 0;
    }
  }
  return m;
}

namespace {

double min_eigenvalue(const std::vector<std::vector<double>>& m) {
  const auto n = static_cast<Eigen::Index>(m.size());
  if (n == 0) return std::numeric_limits<double>::infinity();
  Eigen::MatrixXd a(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
      a(i, j) = 0.5 * (m[ui][uj] + m[uj][ui]);
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

std::string entry(std::size_t i, std::size_t j) { return "M[" + std::to_string(i) + "][" + std::to_string(j) + "]"; }

}  // namespace

PsdCertificate certify_positive_type(const BinaryMatrix& m) {
  const std::size_t n = m.size();
  PsdCertificate c;
  auto fail = [&](std::string why) {
    if (c.counterexample.empty()) c.counterexample = std::move(why);
  };
  for (const auto& row : m) {
    if (row.size() != n) throw DomainError("matrix is not square");
    for (int v : row) {
      if (v != 0 && v != 1) throw DomainError("matrix entries must be 0 or 1");
    }
  }

  c.diagonal = true;
  c.symmetric = true;
  c.transitive = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i][i] != 1) {
      c.diagonal = false;
      fail(entry(i, i) + " != 1");
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (m[i][j] != m[j][i]) {
        c.symmetric = false;
        fail(entry(i, j) + " != " + entry(j, i));
      }
      if (m[i][j] == 0) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (m[j][k] == 1 && m[i][k] == 0) {
          c.transitive = false;
          fail(entry(i, j) + " = " + entry(j, k) + " = 1 but " + entry(i, k) + " = 0");
        }
      }
    }
  }

  std::vector<int> block_of(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    if (block_of[i] >= 0) continue;
    const int b = static_cast<int>(c.blocks.size());
    c.blocks.emplace_back();
    for (std::size_t j = i; j < n; ++j) {
      if (block_of[j] < 0 && (j == i || m[i][j] == 1)) {
        block_of[j] = b;
        c.blocks.back().push_back(j);
      }
    }
  }
  c.blocks_all_ones = true;
  c.cross_blocks_zero = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (block_of[i] == block_of[j] && m[i][j] != 1) {
        c.blocks_all_ones = false;
        fail(entry(i, j) + " = 0 inside a block");
      }
      if (block_of[i] != block_of[j] && m[i][j] != 0) {
        c.cross_blocks_zero = false;
        fail(entry(i, j) + " = 1 across blocks");
      }
    }
  }
  // A block-diagonal sum of all-ones blocks is a sum of multiples of projections.
  c.exact_psd = c.diagonal && c.symmetric && c.blocks_all_ones && c.cross_blocks_zero;

  std::vector<std::vector<double>> md(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) md[i][j] = m[i][j];
  }
  c.min_eigenvalue = n == 0 ? 0.0 : min_eigenvalue(md);
  c.float_psd = c.symmetric && c.min_eigenvalue >= -kEigenTolerance;
  if (!c.float_psd) fail("float min eigenvalue " + std::to_string(c.min_eigenvalue));
  c.pass = c.exact_psd && c.transitive && c.float_psd;
  return c;
}

PsdCertificate certify_positive_type(const WitnessMatrix& m) { return certify_positive_type(m.entries); }

std::vector<Arrow> witness_arrows(const Patch& p, const std::vector<GroupElement>& xs) {
  const auto shared = std::make_shared<const Patch>(p);
  std::vector<Arrow> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(inverse(Arrow::make(group_inv(x), shared)));
  return out;
}

PositiveTypeVerdict generic_positive_type_check(const ArrowPairFunction& f, const std::vector<Arrow>& gammas,
                                                const std::vector<Arrow>& etas) {
  if (gammas.size() != etas.size()) throw DomainError("arrow tuples differ in length");
  if (gammas.empty()) throw DomainError("empty arrow tuple");
  for (std::size_t i = 1; i < gammas.size(); ++i) {
    if (!agree(range(gammas[i]), range(gammas[0])) || !agree(range(etas[i]), range(etas[0]))) {
      throw DomainError("arrow tuple does not share a common range unit");
    }
  }
  auto products = [](const std::vector<Arrow>& as) {
    std::vector<Arrow> inv;
    for (const auto& a : as) inv.push_back(inverse(a));
    std::vector<std::vector<Arrow>> out(as.size());
    for (std::size_t i = 0; i < as.size(); ++i) {
      for (std::size_t j = 0; j < as.size(); ++j) {
        auto c = compose(inv[i], as[j]);
        if (c.status == ComposeStatus::unknown) throw BudgetError("product g_i^{-1} g_j out of budget: " + c.reason);
        if (c.status == ComposeStatus::undefined) throw DomainError("product g_i^{-1} g_j undefined: " + c.reason);
        out[i].push_back(std::move(*c.arrow));
      }
    }
    return out;
  };
  const auto g = products(gammas);
  const auto h = products(etas);
  const std::size_t n = gammas.size();

  PositiveTypeVerdict v;
  v.matrix.assign(n, std::vector<double>(n));
  bool binary = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double x = f(g[i][j], h[i][j]);
      v.matrix[i][j] = x;
      binary = binary && (x == 0.0 || x == 1.0);
    }
  }
  v.symmetric = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (std::abs(v.matrix[i][j] - v.matrix[j][i]) > 1e-12) v.symmetric = false;
    }
  }
  v.min_eigenvalue = min_eigenvalue(v.matrix);
  v.positive = v.symmetric && v.min_eigenvalue >= -kEigenTolerance;
  if (binary) {
    BinaryMatrix b(n, std::vector<int>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) b[i][j] = static_cast<int>(v.matrix[i][j]);
    }
    v.exact = certify_positive_type(b);
    v.agrees = v.exact->pass == v.positive;
  }
  return v;
}

ProperSupportVerdict check_proper_support(const std::vector<Arrow>& arrows, const Window& c, std::size_t n_pairs,
                                          std::uint64_t seed) {
  if (arrows.empty()) throw DomainError("no arrows to sample");
  ProperSupportVerdict v;
  v.c = c;
  std::map<GroupElement, std::vector<std::size_t>> by_x;
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    by_x[arrows[i].x()].push_back(i);
    ++(window_contains(c, arrows[i].x()) ? v.inside : v.outside);
  }
  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < n_pairs; ++k) {
    const std::size_t i = rng() % arrows.size();
    std::size_t j = rng() % arrows.size();
    if (k % 2 == 1) {
      const auto& same = by_x[arrows[i].x()];
      j = same[rng() % same.size()];
    }
    const Arrow& a = arrows[i];
    const Arrow& b = arrows[j];
    ++v.pairs;
    if (psi(a, b) != psi(b, a)) {
      ++v.violations;
      if (v.findings.size() < 10) v.findings.push_back("psi not symmetric at " + a.x().to_string());
    }
    if (psi(a, b) == 0) continue;
    ++v.supported;
    if (a.x() != b.x() || window_contains(c, a.x()) != window_contains(c, b.x())) {
      ++v.violations;
      if (v.findings.size() < 10) v.findings.push_back("support leaves C at " + a.x().to_string() + ", " + b.x().to_string());
    }
  }
  v.pass = v.violations == 0;
  return v;
}

namespace {

/// Float |a^{-1}b| for pruning.
double approx_distance(const std::vector<double>& a, const std::vector<double>& b, bool heisenberg) {
  std::vector<double> d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = b[i] - a[i];
  if (heisenberg) d[2] -= a[0] * d[1];
  double m = 0.0;
  for (double x : d) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

XDiscreteness check_X_discreteness(const PatchCatalog& cat) {
  if (cat.classes.empty()) throw DomainError("empty catalog");
  XDiscreteness v;
  const std::size_t dim = cat.classes.front().dim();
  const bool heisenberg = cat.classes.front().kind() == GroupKind::heisenberg;
  v.k = Window::ball(dim, cat.radius);

  std::set<GroupElement> xs;
  for (const auto& cls : cat.classes) xs.insert(cls.points().begin(), cls.points().end());
  const std::vector<GroupElement> x(xs.begin(), xs.end());
  v.points = x.size();

  for (const auto& p : x) {
    if (p.is_identity()) continue;
    QuadraticScalar n = sup_norm(p);
    if (!v.min_sep || n < *v.min_sep) v.min_sep = std::move(n);
  }

  std::vector<std::vector<double>> ax;
  for (const auto& p : x) ax.push_back(p.approx());
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < x.size(); ++i) {
    const GroupElement inv = group_inv(x[i]);
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (i == j || approx_distance(ax[i], ax[j], heisenberg) > best * (1 + 1e-9) + 1e-12) continue;
      QuadraticScalar d = sup_norm(group_mul(inv, x[j]));
      if (!v.min_pairwise_separation || d < *v.min_pairwise_separation) {
        best = d.to_double();
        v.min_pairwise_separation = std::move(d);
      }
    }
  }

  // X ∩ K ⊆ ⋃_F ⋃_{h ∈ F^{-1}} hF, with K ∩ P = hF for each class P.
  std::set<GroupElement> cover;
  for (const auto& cls : cat.classes) {
    const auto f = classify_clopen(cls, Region(v.k)).representative;
    for (const auto& a : f) {
      const GroupElement h = group_inv(a);
      for (const auto& b : f) cover.insert(group_mul(h, b));
    }
  }
  v.cover_bound = cover.size();
  v.covering = true;
  for (const auto& p : x) {
    if (!window_contains(v.k, p)) continue;
    ++v.covered;
    if (!cover.count(p)) v.covering = false;
  }
  const bool sep_ok = !v.min_sep || scalar_sign(*v.min_sep) > 0;
  const bool pair_ok = !v.min_pairwise_separation || scalar_sign(*v.min_pairwise_separation) > 0;
  v.pass = sep_ok && pair_ok && v.covering && v.covered <= v.cover_bound;
  return v;
}

WitnessMatrix random_witness_instance(const PatchCatalog& cat, std::size_t max_n, std::mt19937_64& rng) {
  if (cat.classes.empty()) throw DomainError("empty catalog");
  if (max_n == 0) throw DomainError("max_n must be positive");
  const Patch& p = cat.classes[rng() % cat.size()];
  const Patch& q = rng() % 2 == 0 ? p : cat.classes[rng() % cat.size()];
  const std::size_t n = 1 + rng() % max_n;
  std::vector<GroupElement> xs, ys;
  for (std::size_t i = 0; i < n; ++i) xs.push_back(p.points()[rng() % p.size()]);
  const GroupElement h = group_mul(q.points()[rng() % q.size()], group_inv(xs[0]));
  for (std::size_t i = 0; i < n; ++i) {
    GroupElement y = group_mul(h, xs[i]);
    if (rng() % 2 == 0 || !q.contains(y)) y = q.points()[rng() % q.size()];
    if (i == 0) y = group_mul(h, xs[0]);
    ys.push_back(std::move(y));
  }
  return build_matrix(p, xs, q, ys);
}

InnerAmenabilityReport inner_amenability_report(const PointSetDescriptor& desc, const InnerAmenabilityParams& params) {
  if (params.sample.dim() != desc.dim() || params.k.dim() != desc.dim()) throw DomainError("window dimension mismatch");
  if (!(params.eps > 0.0)) throw DomainError("eps must be positive");
  InnerAmenabilityReport r;
  r.descriptor = desc.label();
  r.params = params;

  const PatchCatalog cat = enumerate_patches(desc, params.radius, params.sample);
  const std::vector<Arrow> arrows = enumerate_arrows(cat, params.arrow_radius);
  r.catalog_classes = cat.size();
  r.arrows = arrows.size();

  for (const auto& a : arrows) {
    if (!window_contains(params.k, a.x())) continue;
    ++r.diagonal_checked;
    if (std::abs(psi(a, a) - 1.0) >= params.eps) ++r.diagonal_violations;
  }
  r.proper_support = check_proper_support(arrows, params.k, params.support_pairs, params.seed);

  std::mt19937_64 rng(params.seed);
  r.positive_type_min_eigenvalue = std::numeric_limits<double>::infinity();
  for (std::size_t s = 0; s < params.samples; ++s) {
    const auto cert = certify_positive_type(random_witness_instance(cat, params.max_n, rng));
    ++r.positive_type_n;
    if (!cert.pass) ++r.positive_type_failures;
    r.positive_type_min_eigenvalue = std::min(r.positive_type_min_eigenvalue, cert.min_eigenvalue);
  }
  r.x_discreteness = check_X_discreteness(cat);
  r.pass = r.diagonal_violations == 0 && r.proper_support.pass && r.positive_type_failures == 0 && r.x_discreteness.pass;
  return r;
}

}  // namespace flc
