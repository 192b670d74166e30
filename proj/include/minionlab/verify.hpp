#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "minionlab/adversarial.hpp"
#include "minionlab/rational.hpp"

namespace minionlab {

struct SweepResult {
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  std::uint64_t skipped = 0;  // preconditions unmet or verdict indeterminate
  std::vector<std::string> notes;

  bool pass() const { return violations == 0 && checked > 0; }
};

/// Collapsing the first coordinate pair keeps at least half its Shapley
/// value. Exhaustive over all monotone functions at arity <= 5; `samples`
/// random functions otherwise.
SweepResult sweep_collapse_halving(unsigned arity, unsigned samples,
                                   std::uint64_t seed);

/// Averaging a minor's boundary densities over all pairings reproduces the
/// source's even levels, exactly, for random monotone functions of the given
/// odd arity.
SweepResult sweep_pairing_expectation(unsigned arity, unsigned count,
                                      std::uint64_t seed);

/// Even-level mass is positive whenever the first coordinate's Shapley value
/// reaches 1/n. Exhaustive at odd arity <= 5.
SweepResult sweep_even_mass(unsigned arity);

/// The exact two-step average of the merged coordinate's Shapley value is
/// positive whenever the premise holds. Exhaustive at arity 4; random
/// functions at even arity 6..12.
SweepResult sweep_two_step_positivity(unsigned arity, unsigned count,
                                      std::uint64_t seed);

/// Scaled-up critical probability keeps the biased measure above 1 - nu.
SweepResult sweep_russo(unsigned max_arity, const std::vector<Rat>& nus);

/// Boundary intervals are fully contained in the boundary. Exhaustive to
/// arity 4, sampled at arity 5.
SweepResult sweep_sandwich(unsigned max_arity, unsigned samples5,
                           std::uint64_t seed);

/// Adversarial construction over a range of sizes; per-n reports plus the
/// cross-n trend of the first coordinate's value in the padded function.
struct AdversarialSweep {
  SweepResult result;
  std::vector<AdversarialReport> reports;
};
AdversarialSweep sweep_adversarial(const std::vector<unsigned>& sizes);

}  // namespace minionlab
