#pragma once

#include <cstdint>
#include <vector>

#include "minionlab/boolfn.hpp"
#include "minionlab/minors.hpp"
#include "minionlab/shapley.hpp"

namespace minionlab {

/// Partial Boolean function {0,1,?} with monotone-partial closure support.
class PartialBoolFn {
 public:
  explicit PartialBoolFn(unsigned arity);

  unsigned arity() const { return arity_; }
  std::uint64_t size() const { return std::uint64_t(1) << arity_; }

  bool is_set(std::uint64_t x) const { return bitat(set_, x); }
  bool value(std::uint64_t x) const { return bitat(val_, x); }

  /// Sets a point; throws on a conflicting re-assignment.
  void assign(std::uint64_t x, bool v);

  /// Propagates 1s to supersets and 0s to subsets; throws on conflict.
  void close_monotone();

  /// No set pair p <= q with value(p) = 1 and value(q) = 0 (checked through
  /// closures, so gaps with unset intermediates are caught too).
  bool is_monotone_partial() const;

  std::uint64_t num_set() const;

  /// Total function; every point must be set.
  BoolFn to_total() const;

 private:
  static bool bitat(const std::vector<std::uint64_t>& w, std::uint64_t x) {
    return (w[x >> 6] >> (x & 63)) & 1u;
  }
  static void setbit(std::vector<std::uint64_t>& w, std::uint64_t x) {
    w[x >> 6] |= std::uint64_t(1) << (x & 63);
  }

  unsigned arity_;
  std::vector<std::uint64_t> val_, set_;
};

/// The half-threshold gadget: 1 when the weight of coordinates 2..n clears
/// 51n/100, 0 when it stays at or under 49n/100, x_1 in between. Exact
/// rational comparisons; monotone by construction.
BoolFn build_g(unsigned n);

/// Companion function on 2n-1 variables built in three passes: seed the
/// duplicated diagonal with g and close monotonically, then neutralize
/// coordinate 1 by copying values across the x_1 flip, then fill the rest
/// with coordinate 2.
struct HalfBuild {
  BoolFn fn;
  std::vector<std::uint64_t> step1;  // points fixed by the diagonal pass
  std::vector<std::uint64_t> step2;  // points fixed by the flip pass
};
HalfBuild build_f_half_traced(unsigned n);
BoolFn build_f_half(unsigned n);

/// Padded to 2n variables with an ignored coordinate 2, so that g is the
/// minor under pi(i) = ceil(i/2).
BoolFn build_f_full(unsigned n);

/// pi(i) = ceil(i/2) as a VarMap [2n] -> [n].
VarMap halving_map(unsigned n);
/// pi(1) = 1, pi(i) = ceil((i+1)/2): the diagonal map [2n-1] -> [n].
VarMap diagonal_map(unsigned n);

struct AdversarialReport {
  unsigned n = 0;
  ShapleyVector phi_g, phi_half, phi_full;
  bool minor_identity = false;   // g == f_full o pi
  Rat phi_g_first;               // exact Phi_g(coordinate 1)
  Rat expected_phi_g_first;      // window-count / n
  unsigned argmax_g = 0;         // 0-based
  unsigned argmax_full = 0;      // 0-based
  bool argmax_disagrees = false; // pi(argmax_full) != argmax_g
  Rat phi_full_ignored;          // coordinate 2 of f_full (must be 0)
  Rat max_phi_g_rest, max_phi_full_rest;
  bool within_pair_symmetry = false;  // pairs (5,6), (7,8), ... of f_full
  bool across_pair_symmetry = false;  // equality across those pairs
};

AdversarialReport verify_adversarial(unsigned n);

}  // namespace minionlab
