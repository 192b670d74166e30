#pragma once

#include "minionlab/boolfn.hpp"

namespace minionlab {

/// Density of nested boundary pairs: the fraction of pairs (S, T) with
/// |S| = i, |T| = j, S subset T, both in B_f(coord), out of
/// binom(n-1, i) * binom(n-1-i, j-i) such pairs. Requires i < j.
Rat boundary_pair_density(const BoolFn& f, unsigned i, unsigned j,
                          unsigned coord);

/// (sum over even levels of mu(level)) / ceil(arity / 2). For odd arity
/// 2n-1 the divisor is n, the arity of a half-size minor.
Rat even_level_mass(const BoolFn& f, unsigned coord);
Rat even_level_mass(const LevelProfile& profile, unsigned coord);

/// Qualitative check: whenever the coordinate's Shapley value reaches 1/n,
/// the even-level mass must be positive. Reports the observed mass and the
/// scaling ratio mass / phi^2; no universal constant is asserted.
struct EvenMassReport {
  bool premise_met = false;
  Rat phi;
  Rat mass;
  bool positive = false;
  Rat ratio;  // mass / phi^2 when phi > 0
};

EvenMassReport verify_even_mass(const BoolFn& f, unsigned coord);

/// Exact distribution statistics of boundary hits along a uniform maximal
/// chain of subsets of [n]\{coord}; used to cross-check the pair densities.
struct ChainStats {
  Rat expected_hits;        // E[X]
  Rat expected_hit_pairs;   // E[C(X,2)]
  Rat pair_density_total;   // sum_{i<j} mu'(i,j)
};

/// Exhaustive over all (n-1)! chains; guarded to arity <= 7.
ChainStats chain_stats(const BoolFn& f, unsigned coord);

}  // namespace minionlab
