#pragma once

// Systems of linear constraints over nonnegative integer variables, solved
// exactly by branch-and-bound over the rational LP relaxation.

#include "semireach/lp.hpp"

#include <optional>
#include <vector>

namespace semireach::solvers {

struct IlpRow {
  IntegerVec coeffs;
  Relation rel = Relation::Eq;
  Integer rhs;
};

struct IlpSystem {
  std::size_t num_vars = 0;
  std::vector<IlpRow> rows;
  /// Optional per-variable upper bound (inclusive).
  std::vector<std::optional<Integer>> upper;

  explicit IlpSystem(std::size_t n = 0) : num_vars(n), upper(n) {}
  /// Throws std::invalid_argument if the row length differs from num_vars.
  void add(IntegerVec coeffs, Relation rel, Integer rhs);
  bool satisfied_by(const IntegerVec& x) const;
};

struct IlpOptions {
  /// Minimize objective^T x over the solutions instead of returning the first found.
  std::optional<IntegerVec> objective;
};

/// A nonnegative integer solution, or nullopt if there is none.
///
/// Variables without an explicit upper bound are boxed by the classical bound
/// on minimal solutions of integer programs, n (m a)^(2m+1) with a the largest
/// coefficient magnitude, so the search is finite. Equality rows are first
/// checked for solvability over Z through a Hermite normal form.
std::optional<IntegerVec> ilp_nonneg(const IlpSystem& sys, const IlpOptions& opt = {});

/// Whether the equality rows of sys have an integer solution, ignoring signs.
bool integer_lattice_feasible(const IlpSystem& sys);

}  // namespace semireach::solvers
