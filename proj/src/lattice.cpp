#include "kron/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

#include "kron/errors.hpp"
#include "kron/limits.hpp"

namespace kron {

double slab_spacing_constant(int dim) { return std::exp2(-0.5 * (dim - 1)); }

double empty_box_constant(int dim, int n) {
  return (1.0 - 1.0 / (2.0 * n)) / std::sqrt(static_cast<double>(dim)) *
         slab_spacing_constant(dim);
}

LatticeBasis::LatticeBasis(Mat cols) : dim(cols.rows), columns(std::move(cols)) {
  if (dim <= 0 || columns.rows != columns.cols)
    throw Error("LatticeBasis: basis matrix must be square and nonempty");
  det_ = determinant(columns);
  double norm_prod = 1.0;
  for (int j = 0; j < dim; ++j) norm_prod *= norm2(columns.col(j));
  if (!(std::fabs(det_) > 1e-12 * norm_prod))
    throw RankDeficiencyError("LatticeBasis: determinant below 1e-12 * column-norm product");
}

double LatticeBasis::det() const { return det_; }

Vec LatticeBasis::lattice_point(const std::vector<long long>& coeffs) const {
  Vec p(dim, 0.0);
  for (int j = 0; j < dim; ++j) {
    if (coeffs[j] == 0) continue;
    for (int i = 0; i < dim; ++i) p[i] += static_cast<double>(coeffs[j]) * columns(i, j);
  }
  return p;
}

namespace {

GramSchmidtData gram_schmidt_mat(const Mat& B) {
  int d = B.rows;
  GramSchmidtData g;
  g.ortho = Mat(d, d);
  g.mu = Mat(d, d);
  g.ortho_sq = Vec(d, 0.0);
  for (int i = 0; i < d; ++i) {
    Vec bi = B.col(i);
    Vec star = bi;
    for (int j = 0; j < i; ++j) {
      Vec bj_star = g.ortho.col(j);
      double m = dot(bi, bj_star) / g.ortho_sq[j];
      g.mu(i, j) = m;
      for (int c = 0; c < d; ++c) star[c] -= m * bj_star[c];
    }
    g.mu(i, i) = 1.0;
    g.ortho.set_col(i, star);
    g.ortho_sq[i] = dot(star, star);
    if (!(g.ortho_sq[i] > 1e-300))
      throw RankDeficiencyError("gram_schmidt: basis is numerically rank-deficient");
  }
  return g;
}

// Enumerates integer coefficient vectors u with ||B u - t||_2 <= r
// (slightly padded) over an already reduced basis. Standard GSO recursion:
//   ||B u - t||^2 = sum_j ||b*_j||^2 (u_j + sum_{i>j} u_i mu(i,j) - tau_j)^2.
void enumerate_ball_reduced(const Mat& B, const GramSchmidtData& g, const Vec& t, double r,
                            const std::function<void(const Vec&, const std::vector<long long>&)>& visit) {
  int d = B.rows;
  Vec tau(d, 0.0);
  for (int j = 0; j < d; ++j) tau[j] = dot(t, g.ortho.col(j)) / g.ortho_sq[j];

  double r2 = r * r * (1.0 + 1e-9) + 1e-18;
  std::vector<long long> u(d, 0);
  Vec partial(d + 1, 0.0);  // partial[j] = contribution of levels > j-1
  long long nodes = 0;

  // Iterative depth-first search, level d-1 down to 0.
  std::function<void(int)> descend = [&](int j) {
    if (j < 0) {
      Vec p(d, 0.0);
      for (int c = 0; c < d; ++c)
        for (int l = 0; l < d; ++l) p[c] += static_cast<double>(u[l]) * B(c, l);
      visit(p, u);
      return;
    }
    double center = tau[j];
    for (int i = j + 1; i < d; ++i) center -= static_cast<double>(u[i]) * g.mu(i, j);
    double rem = r2 - partial[j + 1];
    if (rem < 0) return;
    double s = std::sqrt(rem / g.ortho_sq[j]);
    long long lo = static_cast<long long>(std::ceil(center - s - 1e-9));
    long long hi = static_cast<long long>(std::floor(center + s + 1e-9));
    for (long long v = lo; v <= hi; ++v) {
      if (++nodes > kNodeBudget)
        throw BudgetError("ball enumeration exceeded node budget");
      double diff = static_cast<double>(v) - center;
      double contrib = g.ortho_sq[j] * diff * diff;
      if (partial[j + 1] + contrib > r2) continue;
      u[j] = v;
      partial[j] = partial[j + 1] + contrib;
      descend(j - 1);
    }
    u[j] = 0;
  };
  descend(d - 1);
}

// Integer change-of-basis T with reduced = original * T.
std::vector<std::vector<long long>> change_of_basis(const Mat& original, const Mat& reduced) {
  Mat T = mat_mul(inverse(original), reduced);
  int d = original.rows;
  std::vector<std::vector<long long>> out(d, std::vector<long long>(d, 0));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      double v = T(i, j);
      long long r = std::llround(v);
      if (std::fabs(v - r) > kIntSnapTol)
        throw InternalError("change_of_basis: transform entry is not an integer");
      out[i][j] = r;
    }
  return out;
}

}  // namespace

GramSchmidtData gram_schmidt(const LatticeBasis& basis) {
  return gram_schmidt_mat(basis.columns);
}

LatticeBasis lll_reduce(const LatticeBasis& basis, double delta) {
  if (!(delta > 0.25 && delta < 1.0))
    throw Error("lll_reduce: delta must lie in (1/4, 1)");
  Mat B = basis.columns;
  int d = B.rows;
  GramSchmidtData g = gram_schmidt_mat(B);

  long long iters = 0;
  int k = 1;
  while (k < d) {
    if (++iters > 1'000'000) throw InternalError("lll_reduce: iteration cap exceeded");
    // Size-reduce column k against k-1 .. 0.
    for (int j = k - 1; j >= 0; --j) {
      long long q = std::llround(g.mu(k, j));
      if (q == 0) continue;
      for (int c = 0; c < d; ++c) B(c, k) -= static_cast<double>(q) * B(c, j);
      for (int l = 0; l <= j; ++l) g.mu(k, l) -= static_cast<double>(q) * g.mu(j, l);
    }
    // Lovasz condition at (k-1, k).
    double m = g.mu(k, k - 1);
    if (g.ortho_sq[k] >= (delta - m * m) * g.ortho_sq[k - 1]) {
      ++k;
    } else {
      for (int c = 0; c < d; ++c) std::swap(B(c, k - 1), B(c, k));
      g = gram_schmidt_mat(B);
      k = std::max(k - 1, 1);
    }
  }
  return LatticeBasis(B);
}

SuccessiveMinima successive_minima(const LatticeBasis& basis) {
  int d = basis.dim;
  if (d > kMinimaDimCap)
    throw CapabilityError("successive_minima: dimension exceeds exact-enumeration cap " +
                          std::to_string(kMinimaDimCap));
  LatticeBasis reduced = lll_reduce(basis);
  GramSchmidtData g = gram_schmidt_mat(reduced.columns);

  // Both are valid upper bounds for lambda_d; enumerate within the smaller.
  double max_col = 0.0;
  for (int j = 0; j < d; ++j) max_col = std::max(max_col, norm2(reduced.columns.col(j)));
  double last_col = norm2(reduced.columns.col(d - 1));
  double radius = std::min(max_col, std::exp2(0.5 * (d - 1)) * last_col);

  struct Cand {
    double norm_sq;
    std::vector<long long> coeffs;
    Vec point;
  };
  std::vector<Cand> cands;
  Vec origin(d, 0.0);
  enumerate_ball_reduced(reduced.columns, g, origin, radius,
                         [&](const Vec& p, const std::vector<long long>& u) {
                           bool zero = true;
                           for (long long v : u)
                             if (v != 0) zero = false;
                           if (zero) return;
                           cands.push_back({dot(p, p), u, p});
                         });
  std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
    if (a.norm_sq != b.norm_sq) return a.norm_sq < b.norm_sq;
    return a.coeffs < b.coeffs;
  });

  SuccessiveMinima out;
  out.witnesses = Mat(d, d);
  std::vector<Vec> chosen_ortho;
  std::vector<const Cand*> chosen;
  for (const Cand& c : cands) {
    if (static_cast<int>(chosen.size()) == d) break;
    Vec resid = c.point;
    for (const Vec& o : chosen_ortho) {
      double f = dot(resid, o) / dot(o, o);
      for (int i = 0; i < d; ++i) resid[i] -= f * o[i];
    }
    if (norm2(resid) <= kRelTol * std::sqrt(c.norm_sq)) continue;  // dependent
    chosen_ortho.push_back(resid);
    chosen.push_back(&c);
  }
  if (static_cast<int>(chosen.size()) < d)
    throw InternalError("successive_minima: enumeration radius missed rank d");

  auto T = change_of_basis(basis.columns, reduced.columns);
  for (int i = 0; i < d; ++i) {
    out.values.push_back(std::sqrt(chosen[i]->norm_sq));
    out.witnesses.set_col(i, chosen[i]->point);
    std::vector<long long> in_input(d, 0);
    for (int r = 0; r < d; ++r)
      for (int cc = 0; cc < d; ++cc) in_input[r] += T[r][cc] * chosen[i]->coeffs[cc];
    out.coeffs.push_back(in_input);
  }

  double mink = std::sqrt(static_cast<double>(d)) *
                std::pow(std::fabs(basis.det()), 1.0 / d);
  if (out.values[0] > mink * (1.0 + kRelTol))
    throw InternalError("successive_minima: Minkowski bound violated");
  return out;
}

std::vector<BoxPoint> lattice_points_in_box(const LatticeBasis& basis, const Vec& lo,
                                            const Vec& hi,
                                            const std::vector<bool>& half_open) {
  int d = basis.dim;
  double vol = 1.0;
  for (int i = 0; i < d; ++i) {
    if (!(lo[i] < hi[i])) throw Error("lattice_points_in_box: requires lo < hi");
    vol *= hi[i] - lo[i];
  }
  if (vol / std::fabs(basis.det()) > static_cast<double>(kEnumBudget))
    throw BudgetError("lattice_points_in_box: box volume / covolume exceeds budget");

  LatticeBasis reduced = lll_reduce(basis);
  Mat inv = inverse(reduced.columns);

  Vec center(d), half(d);
  for (int i = 0; i < d; ++i) {
    center[i] = 0.5 * (lo[i] + hi[i]);
    half[i] = 0.5 * (hi[i] - lo[i]);
  }
  Vec c = mat_vec(inv, center);
  std::vector<long long> lo_u(d), hi_u(d);
  double grid = 1.0;
  for (int i = 0; i < d; ++i) {
    double r = 1e-9;
    for (int j = 0; j < d; ++j) r += std::fabs(inv(i, j)) * half[j];
    lo_u[i] = static_cast<long long>(std::ceil(c[i] - r - 1e-9));
    hi_u[i] = static_cast<long long>(std::floor(c[i] + r + 1e-9));
    if (hi_u[i] < lo_u[i]) return {};
    grid *= static_cast<double>(hi_u[i] - lo_u[i] + 1);
  }
  if (grid > 5.0 * static_cast<double>(kEnumBudget))
    throw BudgetError("lattice_points_in_box: coefficient grid exceeds budget");

  // Per-coordinate interval of what the not-yet-assigned levels can add.
  std::vector<Vec> suff_min(d + 1, Vec(d, 0.0)), suff_max(d + 1, Vec(d, 0.0));
  for (int j = d - 1; j >= 0; --j) {
    for (int cc = 0; cc < d; ++cc) {
      double a = static_cast<double>(lo_u[j]) * reduced.columns(cc, j);
      double b = static_cast<double>(hi_u[j]) * reduced.columns(cc, j);
      suff_min[j][cc] = suff_min[j + 1][cc] + std::min(a, b);
      suff_max[j][cc] = suff_max[j + 1][cc] + std::max(a, b);
    }
  }

  std::vector<BoxPoint> out;
  std::vector<long long> u(d, 0);
  Vec partial(d, 0.0);
  long long nodes = 0;
  std::function<void(int, const Vec&)> descend = [&](int j, const Vec& p) {
    if (j == d) {
      for (int i = 0; i < d; ++i) {
        bool ok = half_open[i] ? (p[i] > lo[i] + kAbsTol && p[i] <= hi[i] + kAbsTol)
                               : (p[i] >= lo[i] - kAbsTol && p[i] <= hi[i] + kAbsTol);
        if (!ok) return;
      }
      out.push_back({p, u});
      return;
    }
    for (long long v = lo_u[j]; v <= hi_u[j]; ++v) {
      if (++nodes > kNodeBudget)
        throw BudgetError("lattice_points_in_box: node budget exceeded");
      Vec p2 = p;
      for (int cc = 0; cc < d; ++cc) p2[cc] += static_cast<double>(v) * reduced.columns(cc, j);
      bool feasible = true;
      for (int cc = 0; cc < d; ++cc) {
        if (p2[cc] + suff_min[j + 1][cc] > hi[cc] + kAbsTol ||
            p2[cc] + suff_max[j + 1][cc] < lo[cc] - kAbsTol) {
          feasible = false;
          break;
        }
      }
      if (!feasible) continue;
      u[j] = v;
      descend(j + 1, p2);
    }
    u[j] = 0;
  };
  descend(0, Vec(d, 0.0));
  return out;
}

void for_each_point_in_ball(const LatticeBasis& basis, const Vec& center, double radius,
                            const std::function<void(const Vec&, const std::vector<long long>&)>& visit) {
  LatticeBasis reduced = lll_reduce(basis);
  GramSchmidtData g = gram_schmidt_mat(reduced.columns);
  auto T = change_of_basis(basis.columns, reduced.columns);
  int d = basis.dim;
  enumerate_ball_reduced(reduced.columns, g, center, radius,
                         [&](const Vec& p, const std::vector<long long>& u) {
                           std::vector<long long> in_input(d, 0);
                           for (int r = 0; r < d; ++r)
                             for (int c = 0; c < d; ++c) in_input[r] += T[r][c] * u[c];
                           visit(p, in_input);
                         });
}

CoveringRectangle covering_rectangle(const LatticeBasis& basis) {
  SuccessiveMinima minima = successive_minima(basis);
  QrResult qr = qr_decompose(minima.witnesses);
  CoveringRectangle rect;
  rect.rotation = qr.q;
  rect.side_lengths = Vec(basis.dim);
  for (int i = 0; i < basis.dim; ++i) rect.side_lengths[i] = qr.r(i, i);
  rect.witness_columns = minima.witnesses;
  rect.minima = minima.values;
  return rect;
}

double rectangle_diameter(const CoveringRectangle& rect) { return norm2(rect.side_lengths); }

Vec babai_nearest_plane(const LatticeBasis& reduced, const GramSchmidtData& gso,
                        const Vec& target) {
  int d = reduced.dim;
  Vec resid = target;
  for (int j = d - 1; j >= 0; --j) {
    double cj = dot(resid, gso.ortho.col(j)) / gso.ortho_sq[j];
    long long uj = std::llround(cj);
    if (uj == 0) continue;
    for (int c = 0; c < d; ++c) resid[c] -= static_cast<double>(uj) * reduced.columns(c, j);
  }
  return vec_sub(target, resid);
}

bool point_in_translated_box(const CoveringRectangle& rect, const LatticeBasis& sublattice,
                             const Vec& target) {
  int d = sublattice.dim;
  double lambda_d = rect.minima.back();
  double radius = 0.5 * std::sqrt(static_cast<double>(d)) * lambda_d;
  double accept = radius * (1.0 + kRelTol);

  LatticeBasis reduced = lll_reduce(sublattice);
  GramSchmidtData gso = gram_schmidt(reduced);
  Vec near = babai_nearest_plane(reduced, gso, target);
  if (norm2(vec_sub(near, target)) <= accept) return true;

  bool found = false;
  for_each_point_in_ball(reduced, target, accept,
                         [&](const Vec& p, const std::vector<long long>&) {
                           if (found) return;
                           if (norm2(vec_sub(p, target)) <= accept) found = true;
                         });
  return found;
}

SlabDecomposition slab_decomposition(const LatticeBasis& basis, int m) {
  int d = basis.dim;
  if (m < 1 || m > d) throw Error("slab_decomposition: m out of range");
  SlabDecomposition out;
  out.reduced_basis = lll_reduce(basis);
  GramSchmidtData g = gram_schmidt(out.reduced_basis);
  double min_sq = g.ortho_sq[m - 1];
  for (int i = m - 1; i < d; ++i) min_sq = std::min(min_sq, g.ortho_sq[i]);
  out.spacing = std::sqrt(min_sq);
  out.subspace_basis = Mat(d, m - 1);
  for (int j = 0; j < m - 1; ++j) out.subspace_basis.set_col(j, out.reduced_basis.columns.col(j));

  if (d <= kMinimaDimCap) {
    double lambda_m = successive_minima(basis).values[m - 1];
    if (out.spacing < slab_spacing_constant(d) * lambda_m * (1.0 - kRelTol))
      throw InternalError("slab_decomposition: spacing fell below c1(d) * lambda_m");
  }
  return out;
}

EmptyBoxOffset empty_box_offset(const LatticeBasis& basis, int n, int m) {
  int d = basis.dim;
  if (n + m != d) throw Error("empty_box_offset: n + m must equal the lattice dimension");
  SuccessiveMinima minima = successive_minima(basis);
  double lambda_m = minima.values[m - 1];
  double side = empty_box_constant(d, n) * lambda_m;
  double spacing = slab_decomposition(basis, m).spacing;

  std::vector<Vec> directions;
  for (int i = 0; i < m; ++i) {
    Vec e(m, 0.0);
    e[i] = 1.0;
    directions.push_back(e);
  }
  if (m > 1) directions.push_back(Vec(m, 1.0 / std::sqrt(static_cast<double>(m))));

  double step = side / 4.0;
  long long max_steps = std::max<long long>(8, static_cast<long long>(std::ceil(4.0 * spacing / step)));
  std::vector<bool> closed(d, false);
  for (const Vec& dir : directions) {
    for (long long j = 0; j <= max_steps; ++j) {
      double t = static_cast<double>(j) * step;
      Vec lo(d, 0.0), hi(d, 0.0);
      for (int i = 0; i < n; ++i) {
        lo[i] = 0.0;
        hi[i] = side;
      }
      for (int i = 0; i < m; ++i) {
        lo[n + i] = t * dir[i];
        hi[n + i] = lo[n + i] + side;
      }
      if (lattice_points_in_box(basis, lo, hi, closed).empty()) {
        EmptyBoxOffset out;
        out.side = side;
        out.offset_y = Vec(m);
        for (int i = 0; i < m; ++i) out.offset_y[i] = t * dir[i];
        return out;
      }
    }
  }
  throw InfeasibilityError("empty_box_offset: offset scan exhausted; pinned constants too aggressive");
}

}  // namespace kron
