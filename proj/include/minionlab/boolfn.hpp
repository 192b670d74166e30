#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "minionlab/rational.hpp"

namespace minionlab {

/// Total Boolean function stored as a 2^n-bit truth table.
///
/// Convention: coordinate c (0-based) is bit c of the table index, so the
/// point {x_0, ..., x_{n-1}} lives at index sum_i x_i * 2^i. The CLI layer
/// presents coordinates 1-based.
///
/// Instances are cheap to copy and meant to be treated as immutable once
/// built; nothing here holds hidden state, so sharing across threads is safe.
class BoolFn {
 public:
  /// Hard cap on arity; override with MINIONLAB_ARITY_CAP.
  static unsigned arity_cap();

  explicit BoolFn(unsigned arity);

  static BoolFn constant(unsigned arity, bool value);
  /// THR_{L,tau}: 1 iff popcount(x) >= tau. tau = 0 gives constant 1.
  static BoolFn threshold(unsigned L, unsigned tau);
  static BoolFn dictator(unsigned arity, unsigned coord);

  unsigned arity() const { return arity_; }
  std::uint64_t size() const { return std::uint64_t(1) << arity_; }

  bool get(std::uint64_t x) const {
    return (words_[x >> 6] >> (x & 63)) & 1u;
  }
  void set(std::uint64_t x, bool v) {
    std::uint64_t m = std::uint64_t(1) << (x & 63);
    if (v)
      words_[x >> 6] |= m;
    else
      words_[x >> 6] &= ~m;
  }

  bool is_constant() const;
  bool is_monotone() const;

  /// Boolean dual x -> 1 - f(~x). Monotone iff f is.
  BoolFn dual() const;

  std::uint64_t count_ones() const;
  /// W_k = #{x : hw(x) = k, f(x) = 1} for k = 0..n.
  std::vector<std::uint64_t> weight_histogram() const;

  const std::vector<std::uint64_t>& words() const { return words_; }

  bool operator==(const BoolFn& o) const {
    return arity_ == o.arity_ && words_ == o.words_;
  }
  bool operator!=(const BoolFn& o) const { return !(*this == o); }

 private:
  unsigned arity_;
  std::vector<std::uint64_t> words_;
};

/// Exact boundary densities mu(j) per coordinate per level, kept as raw
/// counts; densities and Shapley values are derived on demand.
struct LevelProfile {
  unsigned arity = 0;
  /// counts[c][j] = #{S in B_f(c) : |S| = j}, j in 0..arity-1.
  std::vector<std::vector<std::uint64_t>> counts;

  /// mu(j) for a coordinate: boundary count at level j over binom(n-1, j).
  Rat density(unsigned coord, unsigned level) const;
  /// (sum_j mu(j)) / n.
  Rat shapley(unsigned coord) const;
};

/// Boundary profile of a monotone function, O(n 2^n). Throws on
/// non-monotone input.
LevelProfile boundary_profile(const BoolFn& f);

/// True iff every S with S1 <= S <= S2 lies in the boundary B_f(coord).
/// Preconditions (checked): S1 <= S2, neither touches coord, both in the
/// boundary.
bool sandwich_check(const BoolFn& f, unsigned coord, std::uint64_t s1,
                    std::uint64_t s2);

/// P_p(f) = sum_k W_k p^k (1-p)^(n-k), exact.
Rat biased_measure(const BoolFn& f, const Rat& p);
Rat biased_measure(const std::vector<std::uint64_t>& weight_hist,
                   unsigned arity, const Rat& p);

/// Bisection bracket [lo, hi] around the root of P_p(f) = target, with
/// P_lo <= target <= P_hi and hi - lo <= tol (lo == hi on an exact hit).
struct RootBracket {
  Rat lo, hi;
  bool exact() const { return lo == hi; }
  Rat mid() const { return (lo + hi) / 2; }
};

RootBracket biased_root_bracket(const BoolFn& f, const Rat& target,
                                const Rat& tol);

/// Bracket around p_c (where P_p = 1/2). Throws for constant f.
RootBracket critical_bracket(const BoolFn& f, const Rat& tol);
Rat critical_probability(const BoolFn& f, const Rat& tol);

/// Certified points (p1, p2) with P_{p1} <= eps and P_{p2} >= 1 - eps;
/// p2 - p1 overshoots the true crossing window by at most 2 tol.
std::pair<Rat, Rat> threshold_interval(const BoolFn& f, const Rat& eps,
                                       const Rat& tol);

/// Checks P_{p1}(f) >= 1 - nu at p1 = p_c / (2 nu)^2, with p_c bracketed to
/// tol and the verdict evaluated at both bracket endpoints. Throws if the
/// preconditions (p_c <= 1/2 and p1 <= 1/2) fail or cannot be certified.
Verdict russo_inequality_check(const BoolFn& f, const Rat& nu, const Rat& tol);

/// Default bisection tolerance 2^-40.
Rat default_tol();

}  // namespace minionlab
