#pragma once

#include <vector>

#include "kron/lattice.hpp"
#include "kron/linalg.hpp"

namespace kron {

// The m x n coefficient matrix B. Columns are the generating vectors of
// the point set K(B;Q) = { B k (mod 1) : k in {1..floor(Q^{1/n})}^n }.
struct LinearFormMatrix {
  int m = 0;
  int n = 0;
  Mat entries;  // m x n

  LinearFormMatrix() = default;
  LinearFormMatrix(int m_, int n_, Mat e);
  int d() const { return m + n; }
};

// Open subset S of the unit sphere in R^m, as one of four computable
// shapes. Membership in cone(S) = {c u : u in S, c > 0} is strict: the
// zero vector is never a member, and all inequalities carry 1e-12 slack
// toward exclusion.
struct DirectionSpec {
  enum class Kind { FullSphere, Orthant, HalfSphere, AngularCone };

  Kind kind = Kind::FullSphere;
  int m = 0;
  std::vector<int> signs;  // Orthant: +1 / -1 per coordinate
  Vec axis;                // HalfSphere normal or AngularCone center (unit)
  double half_angle = 0.0; // AngularCone only, in (0, pi)

  static DirectionSpec full_sphere(int m);
  static DirectionSpec orthant(std::vector<int> signs);
  static DirectionSpec half_sphere(Vec normal);
  static DirectionSpec angular_cone(Vec center, double half_angle);

  bool cone_contains(const Vec& y) const;
  // True iff S u (-S) covers the unit sphere up to measure zero.
  bool symmetric_closure_covers() const;
};

struct GapQuery {
  LinearFormMatrix B;
  double Q = 0.0;
  double p = 2.0;  // in [1, inf]; INFINITY selects the max norm
  DirectionSpec S;
};

struct GapStats {
  double sup_over_K = 0.0;
  double inf_over_K = 0.0;
  double sup_over_torus_lower = 0.0;
  double sup_over_torus_upper = 0.0;
  double grid_resolution = 0.0;
};

// One generated point of K(B;Q) together with its integer coordinates k.
struct KPoint {
  std::vector<long long> k;
  Vec point;  // B k reduced into [0,1)^m
};

// Points per axis: floor(Q^{1/n}), snapping up when Q^{1/n} sits within
// 1e-12 of an integer.
long long points_per_axis(double Q, int n);

std::vector<KPoint> enumerate_K(const LinearFormMatrix& B, double Q);

// Minimum L^p norm over members of T that lie in cone(S); +infinity when
// no member does.
double directional_inf(const std::vector<Vec>& T, double p, const DirectionSpec& S);

// Exact gap by direct enumeration over k and integer shifts, with a
// doubling shift window (hard cap 2^12; breaching it throws, since
// finiteness is guaranteed).
double gap_direct(const GapQuery& q, const Vec& v);

// Lattice-side machinery: U_B is block lower-unitriangular, A_Q the
// determinant-one diagonal flow. Both are (m+n) x (m+n).
Mat build_UB(const LinearFormMatrix& B);
Mat build_AQ(double Q, int m, int n);

// Directional distance from w to the y-block of lattice points of M Z^d
// whose x-block lies in (0,1]^n. Window doubling as in gap_direct.
double phi(const Mat& M, const Vec& w, double p, const DirectionSpec& S);

// Gap through the lattice identity: Q^{-1/m} phi(A_Q U_B, Q^{1/m} v).
// Agrees with gap_direct to 1e-9 relative.
double gap_via_lattice(const GapQuery& q, const Vec& v);

// sup/inf of the gap over v in K (exact) plus a bracket for the sup over
// the torus from a grid of spacing h. The upper bracket also covers the
// values attained on K itself; for restricted S only the lower bound is
// certified and the upper is +infinity.
GapStats gap_stats(const GapQuery& q, double grid_resolution);

// Consecutive-gap multiset for m = n = 1 with direction Orthant(+):
// distances between consecutive distinct points of K, cyclically. Values
// within 1e-9 are deduplicated before the differences are taken.
std::vector<double> circle_gap_multiset(const LinearFormMatrix& B, double Q);

// Clusters sorted-or-not values with the given absolute tolerance and
// returns one representative per cluster, ascending.
std::vector<double> cluster_values(std::vector<double> values, double tol);

}  // namespace kron
