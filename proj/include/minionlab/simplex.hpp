#pragma once

#include <vector>

#include "minionlab/rational.hpp"

namespace minionlab {

/// Equality-form LP data: rows * x = rhs, x >= 0.
struct LpProblem {
  unsigned num_vars = 0;
  std::vector<std::vector<Rat>> rows;
  std::vector<Rat> rhs;
};

struct LpResult {
  bool feasible = false;
  std::vector<Rat> point;  // a feasible (optimal) point when feasible
  Rat objective;           // value of the maximized objective
};

/// Exact-rational two-phase simplex with Bland's rule (no cycling, no
/// tolerances). Maximizes c * x over {x >= 0 : rows x = rhs}. The feasible
/// region here is always bounded (all our systems imply sum-to-one blocks),
/// so unboundedness is reported as an error.
LpResult lp_maximize(const LpProblem& p, const std::vector<Rat>& objective);

/// Phase 1 only.
LpResult lp_feasible_point(const LpProblem& p);

}  // namespace minionlab
