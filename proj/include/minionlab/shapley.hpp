#pragma once

#include <cstdint>
#include <vector>

#include "minionlab/boolfn.hpp"

namespace minionlab {

/// Exact Shapley vector, one value per coordinate. For monotone non-constant
/// f the values sum to exactly 1; for constant f they are all zero.
struct ShapleyVector {
  std::vector<Rat> values;

  Rat sum() const;
  /// Smallest index among maxima.
  unsigned argmax() const;
};

/// Exact Shapley values via the boundary-density identity
/// phi(i) = (sum_j mu(j)) / n. Throws on non-monotone input.
ShapleyVector shapley_exact(const BoolFn& f);
ShapleyVector shapley_exact(const LevelProfile& profile);

/// Monte-Carlo estimate: each sample walks one uniform 0 -> 1 chain and
/// credits the unique pivot coordinate. Per-sample generators are derived
/// from (seed, sample index), so results do not depend on batching.
struct McShapley {
  unsigned arity = 0;
  std::uint64_t samples = 0;
  std::vector<std::uint64_t> pivots;  // per coordinate

  Rat estimate(unsigned coord) const;
  /// Squared 99%-confidence Hoeffding half-width; uses the rational bound
  /// ln(200) <= 53/10 so coverage checks stay exact.
  Rat halfwidth_sq() const;
  double halfwidth() const;
  /// |estimate - value| <= halfwidth, checked exactly.
  bool covers(unsigned coord, const Rat& value) const;
};

McShapley shapley_montecarlo(const BoolFn& f, std::uint64_t samples,
                             std::uint64_t seed);

/// Coordinates with Shapley value >= lambda. When that set is empty and f is
/// non-constant, falls back to the single argmax coordinate (smallest index
/// on ties); constant f yields the empty set.
struct DecodeSet {
  Rat lambda;
  std::vector<unsigned> coords;
  bool used_fallback = false;
};

DecodeSet decode(const BoolFn& f, const Rat& lambda);
DecodeSet decode(const ShapleyVector& phi, bool constant_fn, const Rat& lambda);

}  // namespace minionlab
