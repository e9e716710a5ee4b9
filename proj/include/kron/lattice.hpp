#pragma once

#include <functional>
#include <vector>

#include "kron/linalg.hpp"

namespace kron {

// Full-rank lattice given by a d x d real column basis. Construction
// rejects numerically singular input: |det| must exceed 1e-12 times the
// product of column norms.
struct LatticeBasis {
  int dim = 0;
  Mat columns;  // d x d, column j is the j-th generator

  LatticeBasis() = default;
  explicit LatticeBasis(Mat cols);

  double det() const;  // cached at construction
  Vec lattice_point(const std::vector<long long>& coeffs) const;

 private:
  double det_ = 0.0;
};

// Classical Gram-Schmidt data for an ordered basis.
//   b_i = b*_i + sum_{j<i} mu(i,j) b*_j
// mu is lower triangular with unit diagonal.
struct GramSchmidtData {
  Mat ortho;    // columns b*_1..b*_d
  Mat mu;       // mu(i,j) for j <= i, diag = 1
  Vec ortho_sq; // ||b*_i||^2, kept for enumeration
};

GramSchmidtData gram_schmidt(const LatticeBasis& basis);

// LLL reduction at parameter delta in (1/4, 1); default 0.75. The output
// generates the same lattice and satisfies size reduction |mu(i,j)| <= 1/2
// plus the Lovasz condition.
LatticeBasis lll_reduce(const LatticeBasis& basis, double delta = 0.75);

// Exact successive minima (L2 lengths) with attaining witnesses, computed
// by LLL-preprocessed Fincke-Pohst enumeration. Ties broken
// lexicographically on (norm, coefficient vector). Dimension cap: 8.
struct SuccessiveMinima {
  Vec values;                                   // lambda_1 <= ... <= lambda_d
  Mat witnesses;                                // column i attains values[i]
  std::vector<std::vector<long long>> coeffs;   // witness coordinates in the input basis
};

SuccessiveMinima successive_minima(const LatticeBasis& basis);

// A lattice point found by box enumeration, with its coefficients in the
// reduced basis used internally (the point itself is what callers want).
struct BoxPoint {
  Vec point;
  std::vector<long long> coeffs;
};

// All lattice points x with lo_i < x_i <= hi_i where half_open[i] is set,
// lo_i <= x_i <= hi_i otherwise. Boundary membership is decided with
// absolute tolerance 1e-12. Budget: box volume / covolume <= 1e7.
std::vector<BoxPoint> lattice_points_in_box(const LatticeBasis& basis, const Vec& lo,
                                            const Vec& hi,
                                            const std::vector<bool>& half_open);

// Enumerates lattice points within L2 distance `radius` of `center` and
// hands them to `visit`. Used by the ball-membership and minima routines.
void for_each_point_in_ball(const LatticeBasis& basis, const Vec& center, double radius,
                            const std::function<void(const Vec&, const std::vector<long long>&)>& visit);

// Rotated rectangle whose witness-sublattice translates tile R^d:
// image of prod_i [-side_i/2, side_i/2] under `rotation`. side_i <=
// lambda_i, so the diameter ||sides||_2 is at most sqrt(d) lambda_d.
struct CoveringRectangle {
  Mat rotation;       // orthogonal factor of the witness matrix
  Vec side_lengths;   // diagonal of the triangular factor
  Mat witness_columns;
  Vec minima;         // lambda_1..lambda_d of the source lattice
};

CoveringRectangle covering_rectangle(const LatticeBasis& basis);

double rectangle_diameter(const CoveringRectangle& rect);

// True iff the closed ball of diameter sqrt(d) lambda_d centered at
// `target` contains a point of the witness sublattice. Babai nearest-plane
// first, local enumeration when the quick test misses.
bool point_in_translated_box(const CoveringRectangle& rect, const LatticeBasis& sublattice,
                             const Vec& target);

// Babai nearest-plane on an LLL-reduced basis.
Vec babai_nearest_plane(const LatticeBasis& reduced, const GramSchmidtData& gso,
                        const Vec& target);

// Splits the lattice into translates of S_m = span(first m-1 LLL vectors).
// spacing = min_{m<=i<=d} ||b*_i||, which is at least c1(d) lambda_m.
struct SlabDecomposition {
  Mat subspace_basis;   // d x (m-1), may have zero columns when m = 1
  double spacing = 0.0;
  LatticeBasis reduced_basis;
};

SlabDecomposition slab_decomposition(const LatticeBasis& basis, int m);

// Offset y in R^m such that [0, side]^d + (0_n, y) contains no lattice
// point, with side = c2(d) lambda_m. Scans candidate offsets along the
// last-m coordinate directions; throws InfeasibilityError when the scan
// is exhausted (signals the pinned constants were too aggressive).
struct EmptyBoxOffset {
  Vec offset_y;  // length m
  double side = 0.0;
};

EmptyBoxOffset empty_box_offset(const LatticeBasis& basis, int n, int m);

}  // namespace kron
