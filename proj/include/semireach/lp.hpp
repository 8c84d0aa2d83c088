#pragma once

// Exact linear programming over the rationals (dense two-phase simplex,
// Bland's rule).

#include "semireach/rational.hpp"

#include <optional>
#include <vector>

namespace semireach::solvers {

enum class Relation { Geq, Eq, Leq };

struct LinRow {
  RationalVec coeffs;
  Relation rel = Relation::Geq;
  Rational rhs;
};

struct LinSystem {
  std::size_t num_vars = 0;
  std::vector<LinRow> rows;

  explicit LinSystem(std::size_t n = 0) : num_vars(n) {}
  /// Throws std::invalid_argument if the row length differs from num_vars.
  void add(RationalVec coeffs, Relation rel, Rational rhs);
  bool satisfied_by(const RationalVec& x) const;
};

/// A point satisfying every row (variables are free), or nullopt if the
/// system is infeasible.
std::optional<RationalVec> lp_feasible(const LinSystem& sys);

enum class LpStatus { Infeasible, Optimal, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  RationalVec x;  // optimal point when status == Optimal
  Rational value;
};

/// Minimizes objective^T x subject to the rows and x >= 0.
LpResult lp_minimize_nonneg(const LinSystem& sys, const RationalVec& objective);

}  // namespace semireach::solvers
