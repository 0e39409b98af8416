#pragma once

#include <optional>
#include <vector>

#include "paley/bignum.hpp"

namespace paley {

enum class RowSense { less_equal, equal, greater_equal };

struct LinearConstraint {
  std::vector<Rational> coeffs;
  RowSense sense = RowSense::less_equal;
  Rational rhs = 0;
};

// maximize <objective, x> subject to the constraints. Variables are
// non-negative unless flagged free.
struct RationalLP {
  std::size_t num_vars = 0;
  std::vector<bool> free_var;  // empty means all non-negative
  std::vector<LinearConstraint> constraints;
  std::vector<Rational> objective;

  // Throws Errc::dimension_mismatch on inconsistent sizes.
  void validate() const;
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpSolution {
  Rational value;
  std::vector<Rational> x;
};

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  std::optional<LpSolution> optimum;  // set iff status == optimal
};

// Two-phase tableau simplex in exact rational arithmetic with Bland's rule,
// so it terminates on degenerate problems.
LpResult lp_solve(const RationalLP& lp);

}  // namespace paley
