#pragma once

#include <stdexcept>

namespace kron {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Enumeration, grid, or scan size exceeds the desk-scale budget.
struct BudgetError : Error {
  using Error::Error;
};

// Input basis is numerically rank-deficient.
struct RankDeficiencyError : Error {
  using Error::Error;
};

// Request exceeds a hard capability limit (e.g. exact-minima dimension cap).
struct CapabilityError : Error {
  using Error::Error;
};

// A search that should succeed exhausted its candidate set.
struct InfeasibilityError : Error {
  using Error::Error;
};

// Consistency check failed; indicates a bug, not bad input.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace kron
