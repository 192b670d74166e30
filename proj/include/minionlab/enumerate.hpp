#pragma once

#include <cstdint>
#include <functional>

#include "minionlab/boolfn.hpp"
#include "minionlab/rng.hpp"

namespace minionlab {

/// Visits every monotone function of the given arity exactly once
/// (counts follow the Dedekind numbers: 3, 6, 20, 168, 7581, ...).
/// Guarded to arity <= 5.
void for_each_monotone(unsigned arity,
                       const std::function<void(const BoolFn&)>& visit);

std::uint64_t count_monotone(unsigned arity);

/// Random monotone function: upward closure of `seeds` random points
/// (clamped to a sensible default when seeds == 0). Not uniform over all
/// monotone functions; meant for property sweeps.
BoolFn random_monotone(unsigned arity, Rng& rng, unsigned seeds = 0);

/// Upward-closes the 1s of f in place (union of up-sets of its 1-points).
BoolFn upward_closure(const BoolFn& f);

}  // namespace minionlab
