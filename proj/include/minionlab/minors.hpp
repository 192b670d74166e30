#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "minionlab/boolfn.hpp"
#include "minionlab/rng.hpp"

namespace minionlab {

/// Coordinate-identification map pi : [n] -> [m] (0-based). Need not be
/// surjective; a 2-to-1 map has n = 2m with every output hit exactly twice.
struct VarMap {
  unsigned from_arity = 0;
  unsigned to_arity = 0;
  std::vector<unsigned> image;  // size from_arity, entries in [0, to_arity)

  void validate() const;
  bool is_two_to_one() const;
  /// Preimages of each output, in ascending order.
  std::vector<std::vector<unsigned>> preimages() const;

  bool operator==(const VarMap& o) const {
    return from_arity == o.from_arity && to_arity == o.to_arity &&
           image == o.image;
  }
};

/// g(x) = f(x o pi): bit i of f's input is bit pi(i) of x.
BoolFn apply_minor(const BoolFn& f, const VarMap& pi);

/// Composition rho_after(pi): apply pi then rho.
VarMap compose(const VarMap& rho, const VarMap& pi);

/// Uniform sample from all 2-to-1 maps [2m] -> [m].
VarMap sample_two_to_one(unsigned m, Rng& rng);
VarMap sample_two_to_one(unsigned m, std::uint64_t seed);

/// All of F_{2->1}(m), each exactly once (guarded to m <= 4: 2520 maps).
std::vector<VarMap> enumerate_two_to_one(unsigned m);

/// Merge coordinate 0 with `partner` into output 0; remaining coordinates
/// keep their relative order. partner in [1, arity).
VarMap collapse_map(unsigned arity, unsigned partner);

/// Minor merging coordinates 0 and 1 (arity even >= 4).
BoolFn pi1_collapse(const BoolFn& f);

/// Fix coordinate 0, pair the remaining even count of coordinates uniformly
/// at random; pairs are labelled 1..n-1 by their smallest element.
/// Input arity odd >= 3.
std::pair<BoolFn, VarMap> pi2_pairing(const BoolFn& fprime, std::uint64_t seed);

/// All pairings usable as the second minor step for target arity n (input
/// arity 2n-1): coordinate 0 fixed, all perfect matchings of the remaining
/// 2n-2 coordinates. Guarded to n <= 8.
std::vector<VarMap> enumerate_pairings(unsigned n);

/// All perfect matchings of {0,...,2k-1}, smallest-unpaired-first recursion.
std::vector<std::vector<std::pair<unsigned, unsigned>>> perfect_matchings(
    unsigned k);

}  // namespace minionlab
