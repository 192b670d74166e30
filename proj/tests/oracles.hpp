// Brute-force reference implementations used only by tests. Each one goes
// through the definitions directly (subset double loops, full permutation
// enumeration) and must stay independent of the library code paths it checks.
#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "minionlab/boolfn.hpp"
#include "minionlab/rational.hpp"

namespace oracles {

using minionlab::BoolFn;
using minionlab::Int;
using minionlab::Rat;

// #{S subset of [n]\{coord} : |S| = level, f(S) = 0, f(S+coord) = 1} by a
// direct scan over all subsets.
inline std::uint64_t boundary_count(const BoolFn& f, unsigned coord,
                                    unsigned level) {
  std::uint64_t bit = std::uint64_t(1) << coord;
  std::uint64_t count = 0;
  for (std::uint64_t s = 0; s < f.size(); ++s) {
    if (s & bit) continue;
    if (static_cast<unsigned>(std::popcount(s)) != level) continue;
    if (!f.get(s) && f.get(s | bit)) ++count;
  }
  return count;
}

inline Rat boundary_density(const BoolFn& f, unsigned coord, unsigned level) {
  Rat r(Int(boundary_count(f, coord, level)),
        minionlab::binomial(f.arity() - 1, level));
  r.canonicalize();
  return r;
}

// Shapley values by enumerating all n! orders and crediting the pivot.
inline std::vector<Rat> shapley_by_permutations(const BoolFn& f) {
  unsigned n = f.arity();
  std::vector<unsigned> perm(n);
  for (unsigned i = 0; i < n; ++i) perm[i] = i;
  std::vector<std::uint64_t> pivots(n, 0);
  std::uint64_t total = 0;
  do {
    ++total;
    std::uint64_t x = 0;
    bool prev = f.get(0);
    for (unsigned step = 0; step < n; ++step) {
      x |= std::uint64_t(1) << perm[step];
      bool cur = f.get(x);
      if (!prev && cur) {
        ++pivots[perm[step]];
        break;
      }
      prev = cur;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<Rat> phi(n);
  for (unsigned i = 0; i < n; ++i) {
    phi[i] = Rat(Int(pivots[i]), Int(total));
    phi[i].canonicalize();
  }
  return phi;
}

// P_p(f) as the pointwise weighted mean sum_x f(x) p^hw(x) (1-p)^(n-hw(x)).
inline Rat biased_measure_pointwise(const BoolFn& f, const Rat& p) {
  Rat total(0);
  Rat q = Rat(1) - p;
  for (std::uint64_t x = 0; x < f.size(); ++x) {
    if (!f.get(x)) continue;
    unsigned hw = static_cast<unsigned>(std::popcount(x));
    total += minionlab::rat_pow(p, hw) * minionlab::rat_pow(q, f.arity() - hw);
  }
  return total;
}

// Nested boundary pairs (S, T), |S| = i, |T| = j, S subset T, both in the
// boundary of coord, counted by a double subset loop.
inline std::uint64_t nested_pair_count(const BoolFn& f, unsigned coord,
                                       unsigned i, unsigned j) {
  std::uint64_t bit = std::uint64_t(1) << coord;
  std::uint64_t count = 0;
  for (std::uint64_t t = 0; t < f.size(); ++t) {
    if (t & bit) continue;
    if (static_cast<unsigned>(std::popcount(t)) != j) continue;
    if (f.get(t) || !f.get(t | bit)) continue;
    // enumerate subsets of t
    std::uint64_t s = 0;
    for (;;) {
      if (static_cast<unsigned>(std::popcount(s)) == i && !f.get(s) &&
          f.get(s | bit))
        ++count;
      if (s == t) break;
      s = (s - t) & t;
    }
  }
  return count;
}

}  // namespace oracles
