#pragma once

namespace kron {

// Geometric predicates, relative.
inline constexpr double kRelTol = 1e-9;
// Boundary membership and strict-inequality slack, absolute.
inline constexpr double kAbsTol = 1e-12;
// Snap-to-integer tolerance for change-of-basis checks.
inline constexpr double kIntSnapTol = 1e-6;
// Clustering tolerance for distinct-gap counting.
inline constexpr double kClusterTol = 1e-9;

// Points per enumeration / grid cells per torus scan.
inline constexpr long long kEnumBudget = 10'000'000;
// Enumeration tree nodes (guards skewed coefficient boxes).
inline constexpr long long kNodeBudget = 50'000'000;
// Exact successive minima are only computed up to this dimension.
inline constexpr int kMinimaDimCap = 8;
// Integer-shift window cap: 2^12.
inline constexpr int kShiftWindowCap = 4096;
// Congruence classes per instance: N^d cap.
inline constexpr long long kClassBudget = 100'000;

// Slab spacing constant c1(d) = 2^{-(d-1)/2}; see lattice.hpp.
double slab_spacing_constant(int dim);
// Empty-box constant c2(d) = (1 - 1/(2n)) * d^{-1/2} * c1(d).
double empty_box_constant(int dim, int n);

}  // namespace kron
