#include "minionlab/adversarial.hpp"

#include <bit>
#include <stdexcept>

namespace minionlab {

PartialBoolFn::PartialBoolFn(unsigned arity) : arity_(arity) {
  if (arity == 0 || arity > BoolFn::arity_cap())
    throw std::invalid_argument("arity out of range");
  std::size_t words = static_cast<std::size_t>((size() + 63) / 64);
  val_.assign(words, 0);
  set_.assign(words, 0);
}

void PartialBoolFn::assign(std::uint64_t x, bool v) {
  if (is_set(x)) {
    if (value(x) != v) throw std::logic_error("conflicting assignment");
    return;
  }
  setbit(set_, x);
  if (v) setbit(val_, x);
}

void PartialBoolFn::close_monotone() {
  // ones upward
  for (unsigned c = 0; c < arity_; ++c) {
    std::uint64_t bit = std::uint64_t(1) << c;
    for (std::uint64_t x = 0; x < size(); ++x) {
      if (x & bit) continue;
      if (is_set(x) && value(x)) assign(x | bit, true);
    }
  }
  // zeros downward
  for (unsigned c = 0; c < arity_; ++c) {
    std::uint64_t bit = std::uint64_t(1) << c;
    for (std::uint64_t x = 0; x < size(); ++x) {
      if (x & bit) continue;
      if (is_set(x | bit) && !value(x | bit)) assign(x, false);
    }
  }
}

bool PartialBoolFn::is_monotone_partial() const {
  // Closure of the 1s must not collide with an assigned 0 (and vice versa;
  // one direction implies the other).
  std::vector<std::uint64_t> up = val_;
  auto at = [&](const std::vector<std::uint64_t>& w, std::uint64_t x) {
    return (w[x >> 6] >> (x & 63)) & 1u;
  };
  for (unsigned c = 0; c < arity_; ++c) {
    std::uint64_t bit = std::uint64_t(1) << c;
    for (std::uint64_t x = 0; x < size(); ++x) {
      if (x & bit) continue;
      if (at(up, x)) up[(x | bit) >> 6] |= std::uint64_t(1) << ((x | bit) & 63);
    }
  }
  for (std::uint64_t x = 0; x < size(); ++x)
    if (at(up, x) && is_set(x) && !value(x)) return false;
  return true;
}

std::uint64_t PartialBoolFn::num_set() const {
  std::uint64_t n = 0;
  for (auto w : set_) n += static_cast<unsigned>(std::popcount(w));
  return n;
}

BoolFn PartialBoolFn::to_total() const {
  if (num_set() != size()) throw std::logic_error("partial function has gaps");
  BoolFn f(arity_);
  for (std::uint64_t x = 0; x < size(); ++x) f.set(x, value(x));
  return f;
}

BoolFn build_g(unsigned n) {
  if (n < 2) throw std::invalid_argument("build_g needs n >= 2");
  BoolFn g(n);
  for (std::uint64_t x = 0; x < g.size(); ++x) {
    unsigned s = static_cast<unsigned>(std::popcount(x >> 1));
    bool v;
    if (100ull * s >= 51ull * n)
      v = true;
    else if (100ull * s <= 49ull * n)
      v = false;
    else
      v = x & 1;
    g.set(x, v);
  }
  return g;
}

VarMap diagonal_map(unsigned n) {
  VarMap pi;
  pi.from_arity = 2 * n - 1;
  pi.to_arity = n;
  pi.image.resize(pi.from_arity);
  pi.image[0] = 0;
  for (unsigned i = 1; i < pi.from_arity; ++i) pi.image[i] = (i + 1) / 2;
  return pi;
}

VarMap halving_map(unsigned n) {
  VarMap pi;
  pi.from_arity = 2 * n;
  pi.to_arity = n;
  pi.image.resize(pi.from_arity);
  for (unsigned i = 0; i < pi.from_arity; ++i) pi.image[i] = i / 2;
  return pi;
}

HalfBuild build_f_half_traced(unsigned n) {
  if (n < 2) throw std::invalid_argument("build_f_half needs n >= 2");
  unsigned m = 2 * n - 1;
  BoolFn g = build_g(n);
  PartialBoolFn f(m);

  // pass 1: seed the diagonal and close monotonically
  for (std::uint64_t x = 0; x < g.size(); ++x) {
    std::uint64_t diag = x & 1;
    for (unsigned j = 1; j < n; ++j)
      if ((x >> j) & 1) diag |= std::uint64_t(3) << (2 * j - 1);
    f.assign(diag, g.get(x));
  }
  f.close_monotone();
  if (!f.is_monotone_partial())
    throw std::logic_error("diagonal pass lost monotonicity");
  std::size_t words = static_cast<std::size_t>((f.size() + 63) / 64);
  std::vector<std::uint64_t> step1(words, 0), step2(words, 0);
  for (std::uint64_t y = 0; y < f.size(); ++y)
    if (f.is_set(y)) step1[y >> 6] |= std::uint64_t(1) << (y & 63);

  // pass 2: copy values across the coordinate-1 flip where pass 1 fixed them
  auto in = [&](const std::vector<std::uint64_t>& w, std::uint64_t x) {
    return (w[x >> 6] >> (x & 63)) & 1u;
  };
  for (std::uint64_t y = 0; y < f.size(); ++y) {
    if (f.is_set(y)) continue;
    std::uint64_t partner = y ^ 1;
    if (!in(step1, partner)) continue;
    if (!(y & 1) && f.value(partner)) {
      f.assign(y, true);
      step2[y >> 6] |= std::uint64_t(1) << (y & 63);
    } else if ((y & 1) && !f.value(partner)) {
      f.assign(y, false);
      step2[y >> 6] |= std::uint64_t(1) << (y & 63);
    }
  }
  if (!f.is_monotone_partial())
    throw std::logic_error("flip pass lost monotonicity");

  // pass 3: everything else copies coordinate 2
  for (std::uint64_t y = 0; y < f.size(); ++y)
    if (!f.is_set(y)) f.assign(y, (y >> 1) & 1);

  HalfBuild out{f.to_total(), std::move(step1), std::move(step2)};
  if (!out.fn.is_monotone())
    throw std::logic_error("completed function is not monotone");
  if (apply_minor(out.fn, diagonal_map(n)) != g)
    throw std::logic_error("diagonal identity broken");
  return out;
}

BoolFn build_f_half(unsigned n) { return build_f_half_traced(n).fn; }

BoolFn build_f_full(unsigned n) {
  BoolFn half = build_f_half(n);
  BoolFn full(2 * n);
  for (std::uint64_t y = 0; y < full.size(); ++y) {
    std::uint64_t z = (y & 1) | ((y >> 2) << 1);
    full.set(y, half.get(z));
  }
  return full;
}

AdversarialReport verify_adversarial(unsigned n) {
  AdversarialReport r;
  r.n = n;
  BoolFn g = build_g(n);
  BoolFn half = build_f_half(n);
  BoolFn full = build_f_full(n);

  r.minor_identity = apply_minor(full, halving_map(n)) == g;
  r.phi_g = shapley_exact(g);
  r.phi_half = shapley_exact(half);
  r.phi_full = shapley_exact(full);

  r.phi_g_first = r.phi_g.values[0];
  unsigned window = 0;
  for (unsigned j = 0; j <= n; ++j)
    if (100ull * j > 49ull * n && 100ull * j < 51ull * n) ++window;
  r.expected_phi_g_first = Rat(window, n);
  r.expected_phi_g_first.canonicalize();

  r.argmax_g = r.phi_g.argmax();
  r.argmax_full = r.phi_full.argmax();
  r.argmax_disagrees = halving_map(n).image[r.argmax_full] != r.argmax_g;
  r.phi_full_ignored = r.phi_full.values[1];

  r.max_phi_g_rest = 0;
  for (unsigned i = 1; i < n; ++i)
    if (r.phi_g.values[i] > r.max_phi_g_rest)
      r.max_phi_g_rest = r.phi_g.values[i];
  r.max_phi_full_rest = 0;
  for (unsigned i = 0; i < 2 * n; ++i)
    if (i != 2 && r.phi_full.values[i] > r.max_phi_full_rest)
      r.max_phi_full_rest = r.phi_full.values[i];

  // f_full duplicates source coordinates as pairs (2j-1, 2j) 0-based for
  // j >= 2; the pair (2,3) carries the filler coordinate and is reported
  // through argmax instead.
  r.within_pair_symmetry = true;
  r.across_pair_symmetry = true;
  for (unsigned j = 2; j < n; ++j) {
    if (r.phi_full.values[2 * j] != r.phi_full.values[2 * j + 1])
      r.within_pair_symmetry = false;
    if (j > 2 && r.phi_full.values[2 * j] != r.phi_full.values[4])
      r.across_pair_symmetry = false;
  }
  return r;
}

}  // namespace minionlab
