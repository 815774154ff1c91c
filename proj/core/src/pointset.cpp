#include "flc/pointset.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include <Eigen/Dense>

#include "flc/error.hpp"

namespace flc {

namespace {

constexpr double kMaxParameter = 1099511627776.0;  // 2^40
constexpr double kMaxOuterIterations = 2e8;
constexpr double kMaxCandidates = 5e6;

/// Visits every integer vector t whose float image A t lies in the row box
/// [lo, hi] widened by a rounding slack. The caller decides membership exactly,
/// so the scan only has to be a superset of the true solutions.
void scan_parameters(const Eigen::MatrixXd& a, const std::vector<double>& lo, const std::vector<double>& hi,
                     const std::function<void(const std::vector<long>&)>& visit) {
  const auto m = static_cast<int>(a.cols());
  const auto rows = static_cast<int>(a.rows());
  Eigen::FullPivLU<Eigen::MatrixXd> lu(a);
  if (rows != m || !lu.isInvertible()) throw DomainError("parametrization matrix is not square and invertible");
  const Eigen::MatrixXd inv = lu.inverse();

  std::vector<long> tlo(m), thi(m);
  double outer = 1.0;
  for (int i = 0; i < m; ++i) {
    double center = 0.0, spread = 0.0;
    for (int j = 0; j < rows; ++j) {
      center += inv(i, j) * 0.5 * (lo[j] + hi[j]);
      spread += std::abs(inv(i, j)) * 0.5 * (hi[j] - lo[j]);
    }
    spread = spread * (1.0 + 1e-9) + 1e-9 * std::abs(center);
    const double l = std::floor(center - spread) - 1.0;
    const double h = std::ceil(center + spread) + 1.0;
    if (!(std::abs(l) < kMaxParameter && std::abs(h) < kMaxParameter)) {
      throw BudgetError("parameter bound overflow while enumerating window");
    }
    tlo[i] = static_cast<long>(l);
    thi[i] = static_cast<long>(h);
    if (i + 1 < m) outer *= static_cast<double>(thi[i] - tlo[i] + 1);
  }
  if (outer > kMaxOuterIterations) throw BudgetError("enumeration box too large");

  std::vector<double> slack(rows);
  for (int j = 0; j < rows; ++j) {
    double scale = 1.0 + std::abs(lo[j]) + std::abs(hi[j]);
    for (int i = 0; i < m; ++i) {
      scale += std::abs(a(j, i)) * static_cast<double>(std::max(std::labs(tlo[i]), std::labs(thi[i])));
    }
    slack[j] = 1e-9 * scale;
  }

  std::vector<long> t(m);
  double visited = 0.0;
  std::function<void(int, const std::vector<double>&)> level = [&](int i, const std::vector<double>& partial) {
    if (i == m - 1) {
      double l = static_cast<double>(tlo[i]);
      double h = static_cast<double>(thi[i]);
      for (int j = 0; j < rows; ++j) {
        const double c = a(j, i);
        const double low = lo[j] - slack[j] - partial[j];
        const double high = hi[j] + slack[j] - partial[j];
        if (c == 0.0) {
          if (low > 0.0 || high < 0.0) return;
          continue;
        }
        double x = low / c, y = high / c;
        if (c < 0) std::swap(x, y);
        l = std::max(l, x);
        h = std::min(h, y);
      }
      if (h >= l) visited += std::floor(h) - std::ceil(l) + 1.0;
      if (visited > kMaxCandidates) throw BudgetError("enumeration window holds too many candidates");
      for (long v = static_cast<long>(std::ceil(l)); static_cast<double>(v) <= h; ++v) {
        t[i] = v;
        visit(t);
      }
      return;
    }
    std::vector<double> next(partial.size());
    for (long v = tlo[i]; v <= thi[i]; ++v) {
      t[i] = v;
      for (int j = 0; j < rows; ++j) next[j] = partial[j] + a(j, i) * static_cast<double>(v);
      level(i + 1, next);
    }
  };
  level(0, std::vector<double>(rows, 0.0));
}

std::vector<QuadraticScalar> apply_map(const CoordinateMatrix& map, const std::vector<long>& t) {
  std::vector<QuadraticScalar> out;
  out.reserve(map.size());
  for (const auto& row : map) {
    QuadraticScalar s;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (t[i] != 0 && !row[i].is_zero()) s += row[i] * QuadraticScalar(t[i]);
    }
    out.push_back(std::move(s));
  }
  return out;
}

void sort_unique(std::vector<GroupElement>& pts, bool collisions_are_errors) {
  std::sort(pts.begin(), pts.end());
  auto it = std::adjacent_find(pts.begin(), pts.end());
  if (it != pts.end() && collisions_are_errors) {
    throw DomainError("physical projection is not injective: two parameters map to " + it->to_string());
  }
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

void check_window_dim(const Window& k, std::size_t dim) {
  if (k.dim() != dim) throw DomainError("window dimension does not match the group");
  k.validate();
}

}  // namespace

std::optional<std::vector<mpz_class>> integer_coordinates(const std::vector<GroupElement>& basis,
                                                          const GroupElement& target) {
  const std::size_t m = basis.size();
  const std::size_t n = target.dim();
  // Two rational equations (rational and sqrt parts) per coordinate.
  std::vector<std::vector<mpq_class>> rows;
  for (std::size_t c = 0; c < n; ++c) {
    for (int part = 0; part < 2; ++part) {
      std::vector<mpq_class> row(m + 1);
      for (std::size_t i = 0; i < m; ++i) row[i] = part == 0 ? basis[i][c].p() : basis[i][c].q();
      row[m] = part == 0 ? target[c].p() : target[c].q();
      rows.push_back(std::move(row));
    }
  }
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t col = 0; col < m && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && sgn(rows[piv][col]) == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    const mpq_class lead = rows[rank][col];
    for (auto& v : rows[rank]) v /= lead;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || sgn(rows[r][col]) == 0) continue;
      const mpq_class f = rows[r][col];
      for (std::size_t k = col; k <= m; ++k) rows[r][k] -= f * rows[rank][k];
    }
    pivots.push_back(col);
    ++rank;
  }
  if (rank < m) throw DomainError("lattice basis is linearly dependent");
  for (std::size_t r = rank; r < rows.size(); ++r) {
    if (sgn(rows[r][m]) != 0) return std::nullopt;
  }
  std::vector<mpz_class> out(m);
  for (std::size_t r = 0; r < rank; ++r) {
    const mpq_class& v = rows[r][m];
    if (v.get_den() != 1) return std::nullopt;
    out[pivots[r]] = v.get_num();
  }
  return out;
}

PointSetDescriptor PointSetDescriptor::lattice(std::string label, GroupKind kind, std::vector<GroupElement> basis,
                                               std::vector<GroupElement> offsets) {
  if (basis.empty()) throw DomainError("lattice needs a basis");
  const std::size_t dim = basis.front().dim();
  if (kind == GroupKind::heisenberg && dim != 3) throw DomainError("Heisenberg elements have 3 coordinates");
  if (basis.size() != dim) throw DomainError("lattice basis must have one vector per coordinate");
  for (const auto& b : basis) {
    if (b.kind() != kind || b.dim() != dim) throw DomainError("basis element has the wrong group variant");
  }
  if (offsets.empty()) offsets.push_back(GroupElement::identity(kind, dim));
  for (const auto& o : offsets) {
    if (o.kind() != kind || o.dim() != dim) throw DomainError("offset has the wrong group variant");
    if (kind == GroupKind::heisenberg && !o.is_identity()) {
      throw DomainError("Heisenberg lattices take no coset offsets");
    }
  }
  if (kind == GroupKind::heisenberg) {
    // The coordinate span is a subgroup iff every (0, 0, x_i y_j) lies in it.
    for (const auto& bi : basis) {
      for (const auto& bj : basis) {
        GroupElement corr = GroupElement::heisenberg(0, 0, bi[0] * bj[1]);
        if (!integer_coordinates(basis, corr)) {
          throw DomainError("coordinate span of the basis is not closed under the Heisenberg law");
        }
      }
    }
  } else {
    integer_coordinates(basis, GroupElement::identity(kind, dim));  // independence check
  }
  PointSetDescriptor d;
  d.label_ = std::move(label);
  d.kind_ = kind;
  d.dim_ = dim;
  d.data_ = LatticeData{std::move(basis), std::move(offsets)};
  return d;
}

PointSetDescriptor PointSetDescriptor::model_set(std::string label, GroupKind kind, CoordinateMatrix phys_map,
                                                 CoordinateMatrix int_map, GroupKind internal_kind, Window window) {
  if (phys_map.empty() || int_map.empty()) throw DomainError("model set needs physical and internal maps");
  const std::size_t rank = phys_map.front().size();
  for (const auto& r : phys_map) {
    if (r.size() != rank) throw DomainError("ragged physical map");
  }
  for (const auto& r : int_map) {
    if (r.size() != rank) throw DomainError("ragged internal map");
  }
  if (phys_map.size() + int_map.size() != rank) {
    throw DomainError("model set rank must equal dim G + dim H");
  }
  if (kind == GroupKind::heisenberg && phys_map.size() != 3) throw DomainError("Heisenberg G has 3 coordinates");
  if (internal_kind == GroupKind::heisenberg && int_map.size() != 3) {
    throw DomainError("Heisenberg H has 3 coordinates");
  }
  if (window.dim() != int_map.size()) throw DomainError("window dimension does not match H");
  window.validate();
  if (!window.is_coordinate_symmetric()) throw DomainError("model-set window must be symmetric");
  for (const auto& h : window.hi) {
    if (scalar_sign(h) <= 0) throw DomainError("model-set window must be a neighborhood of the identity");
  }
  if (internal_kind == GroupKind::heisenberg) window.symmetrized = true;
  PointSetDescriptor d;
  d.label_ = std::move(label);
  d.kind_ = kind;
  d.dim_ = phys_map.size();
  d.data_ = ModelSetData{std::move(phys_map), std::move(int_map), internal_kind, std::move(window)};
  return d;
}

PointSample enumerate_window(const PointSetDescriptor& desc, const Window& k) {
  check_window_dim(k, desc.dim());
  PointSample out{k, {}};

  if (desc.is_lattice()) {
    const auto& lat = desc.lattice_data();
    const std::size_t n = desc.dim();
    Eigen::MatrixXd a(n, n);
    CoordinateMatrix exact(n, std::vector<QuadraticScalar>(n));
    for (std::size_t c = 0; c < n; ++c) {
      for (std::size_t i = 0; i < n; ++i) {
        exact[c][i] = lat.basis[i][c];
        a(static_cast<long>(c), static_cast<long>(i)) = lat.basis[i][c].to_double();
      }
    }
    for (const auto& offset : lat.offsets) {
      std::vector<double> lo(n), hi(n);
      for (std::size_t c = 0; c < n; ++c) {
        lo[c] = (k.lo[c] - offset[c]).to_double();
        hi[c] = (k.hi[c] - offset[c]).to_double();
      }
      scan_parameters(a, lo, hi, [&](const std::vector<long>& t) {
        std::vector<QuadraticScalar> coords = apply_map(exact, t);
        for (std::size_t c = 0; c < n; ++c) coords[c] += offset[c];
        GroupElement g(desc.kind(), std::move(coords));
        if (window_contains(k, g)) out.points.push_back(std::move(g));
      });
    }
    sort_unique(out.points, false);
    return out;
  }

  const auto& ms = desc.model_set_data();
  const std::size_t n = ms.phys_map.size();
  const std::size_t kdim = ms.int_map.size();
  const std::size_t rank = n + kdim;
  Eigen::MatrixXd a(rank, rank);
  std::vector<double> lo(rank), hi(rank);
  for (std::size_t r = 0; r < rank; ++r) {
    const auto& row = r < n ? ms.phys_map[r] : ms.int_map[r - n];
    for (std::size_t i = 0; i < rank; ++i) a(static_cast<long>(r), static_cast<long>(i)) = row[i].to_double();
    lo[r] = (r < n ? k.lo[r] : ms.window.lo[r - n]).to_double();
    hi[r] = (r < n ? k.hi[r] : ms.window.hi[r - n]).to_double();
  }
  scan_parameters(a, lo, hi, [&](const std::vector<long>& t) {
    GroupElement internal(ms.internal_kind, apply_map(ms.int_map, t));
    if (!window_contains(ms.window, internal)) return;
    GroupElement g(desc.kind(), apply_map(ms.phys_map, t));
    if (window_contains(k, g)) out.points.push_back(std::move(g));
  });
  sort_unique(out.points, true);
  return out;
}

PointSample left_translate_points(const PointSetDescriptor& desc, const GroupElement& g, const Window& k) {
  check_window_dim(k, desc.dim());
  const PointSample base = enumerate_window(desc, translate_hull(group_inv(g), k));
  PointSample out{k, {}};
  for (const auto& p : base.points) {
    GroupElement q = group_mul(g, p);
    if (window_contains(k, q)) out.points.push_back(std::move(q));
  }
  std::sort(out.points.begin(), out.points.end());
  return out;
}

PointSetDescriptor difference_carrier(const PointSetDescriptor& desc) {
  const std::string label = desc.label() + "/carrier";
  if (desc.is_lattice()) {
    const auto& lat = desc.lattice_data();
    std::vector<GroupElement> offsets;
    for (const auto& oi : lat.offsets) {
      for (const auto& oj : lat.offsets) offsets.push_back(group_mul(group_inv(oi), oj));
    }
    std::sort(offsets.begin(), offsets.end());
    offsets.erase(std::unique(offsets.begin(), offsets.end()), offsets.end());
    return PointSetDescriptor::lattice(label, desc.kind(), lat.basis, std::move(offsets));
  }
  const auto& ms = desc.model_set_data();
  Window w = difference_hull(ms.window, ms.window, ms.internal_kind);
  w.open = false;
  w.symmetrized = false;
  return PointSetDescriptor::model_set(label, desc.kind(), ms.phys_map, ms.int_map, ms.internal_kind, std::move(w));
}

PointSample difference_sample(const PointSetDescriptor& desc, const Window& k) {
  return enumerate_window(difference_carrier(desc), k);
}

QuadraticScalar identity_gap(const PointSetDescriptor& desc, const QuadraticScalar& max_radius) {
  for (QuadraticScalar r(1); r <= max_radius; r *= QuadraticScalar(2)) {
    const PointSample s = enumerate_window(desc, Window::ball(desc.dim(), r));
    std::optional<QuadraticScalar> best;
    for (const auto& p : s.points) {
      if (p.is_identity()) continue;
      QuadraticScalar nrm = sup_norm(p);
      if (!best || nrm < *best) best = std::move(nrm);
    }
    if (best) return *best;
  }
  throw BudgetError("no non-identity point within radius " + max_radius.to_string());
}

}  // namespace flc
