#pragma once

#include <string>
#include <vector>

#include "minionlab/intsolve.hpp"
#include "minionlab/pcsp.hpp"
#include "minionlab/simplex.hpp"

namespace minionlab {

/// Shared relaxation skeleton: one weight per (variable, value) and one per
/// (constraint, scope-consistent strong tuple), tied together by integer
/// equations (normalizations and per-position marginals). Repeated scope
/// variables restrict a constraint's tuple set to the consistent tuples,
/// which is what makes e.g. x != x infeasible.
struct RelaxationSystem {
  struct Weight {
    bool is_tuple = false;
    unsigned var = 0, value = 0;   // variable weights
    unsigned constraint = 0, tuple = 0;  // tuple weights
    std::string name() const;
  };
  struct Equation {
    std::vector<std::pair<unsigned, long>> terms;  // (weight, coefficient)
    long rhs = 0;
  };

  std::vector<Weight> weights;
  std::vector<Equation> equations;

  LpProblem lp() const;
  /// Integer system restricted to a support (weights outside it fixed to 0).
  IntSystem integer_system(const std::vector<char>& support) const;
};

RelaxationSystem build_relaxation(const Instance& inst, const Template& t);

struct BlpResult {
  bool feasible = false;
  std::vector<Rat> interior;   // relative-interior point when feasible
  std::vector<char> support;   // weights that can be positive
};

/// Feasibility plus a relative-interior point, computed as the average of
/// per-weight maximizing solutions. Exact; deterministic.
BlpResult solve_blp(const RelaxationSystem& sys);

/// Integer feasibility of the support-restricted equations (negative
/// entries allowed, nonnegativity dropped).
bool solve_aip(const RelaxationSystem& sys, const std::vector<char>& support);

struct DecideVerdict {
  bool accept = false;
  bool blp_feasible = false;
  bool aip_feasible = false;
  std::size_t support_size = 0;
};

/// Accept iff the BLP is feasible and the affine step succeeds on its
/// relative-interior support. Rejection certifies the instance is not
/// strong-satisfiable; acceptance implies weak satisfiability whenever the
/// template has symmetric polymorphisms of unbounded arity.
DecideVerdict decide(const Instance& inst, const Template& t);

}  // namespace minionlab
