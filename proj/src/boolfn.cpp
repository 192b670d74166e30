#include "minionlab/boolfn.hpp"

#include <bit>
#include <cstdlib>
#include <stdexcept>

namespace minionlab {

namespace {

unsigned read_arity_cap() {
  if (const char* env = std::getenv("MINIONLAB_ARITY_CAP")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1 && v <= 30) return static_cast<unsigned>(v);
  }
  return 24;
}

}  // namespace

unsigned BoolFn::arity_cap() {
  static unsigned cap = read_arity_cap();
  return cap;
}

BoolFn::BoolFn(unsigned arity) : arity_(arity) {
  if (arity == 0 || arity > arity_cap())
    throw std::invalid_argument("arity out of range [1, " +
                                std::to_string(arity_cap()) + "]");
  words_.assign(((std::uint64_t(1) << arity) + 63) / 64, 0);
}

BoolFn BoolFn::constant(unsigned arity, bool value) {
  BoolFn f(arity);
  if (value) {
    for (auto& w : f.words_) w = ~std::uint64_t(0);
    if (arity < 6) f.words_[0] = (std::uint64_t(1) << f.size()) - 1;
  }
  return f;
}

BoolFn BoolFn::threshold(unsigned L, unsigned tau) {
  if (tau > L) throw std::invalid_argument("threshold tau out of [0, L]");
  BoolFn f(L);
  for (std::uint64_t x = 0; x < f.size(); ++x)
    if (std::popcount(x) >= static_cast<int>(tau)) f.set(x, true);
  return f;
}

BoolFn BoolFn::dictator(unsigned arity, unsigned coord) {
  if (coord >= arity) throw std::invalid_argument("dictator coord out of range");
  BoolFn f(arity);
  for (std::uint64_t x = 0; x < f.size(); ++x)
    if ((x >> coord) & 1) f.set(x, true);
  return f;
}

bool BoolFn::is_constant() const {
  bool v = get(0);
  for (std::uint64_t x = 1; x < size(); ++x)
    if (get(x) != v) return false;
  return true;
}

bool BoolFn::is_monotone() const {
  // f(x) <= f(x | bit) for every unset bit of every point.
  for (unsigned c = 0; c < arity_; ++c) {
    std::uint64_t bit = std::uint64_t(1) << c;
    for (std::uint64_t x = 0; x < size(); ++x) {
      if (x & bit) continue;
      if (get(x) && !get(x | bit)) return false;
    }
  }
  return true;
}

BoolFn BoolFn::dual() const {
  BoolFn d(arity_);
  std::uint64_t mask = size() - 1;
  for (std::uint64_t x = 0; x < size(); ++x) d.set(x, !get(~x & mask));
  return d;
}

std::uint64_t BoolFn::count_ones() const {
  std::uint64_t n = 0;
  for (auto w : words_) n += static_cast<unsigned>(std::popcount(w));
  return n;
}

std::vector<std::uint64_t> BoolFn::weight_histogram() const {
  std::vector<std::uint64_t> w(arity_ + 1, 0);
  for (std::uint64_t x = 0; x < size(); ++x)
    if (get(x)) ++w[static_cast<unsigned>(std::popcount(x))];
  return w;
}

Rat LevelProfile::density(unsigned coord, unsigned level) const {
  Rat r(Int(counts[coord][level]), binomial(arity - 1, level));
  r.canonicalize();
  return r;
}

Rat LevelProfile::shapley(unsigned coord) const {
  Rat sum(0);
  for (unsigned j = 0; j < arity; ++j) sum += density(coord, j);
  return sum / arity;
}

LevelProfile boundary_profile(const BoolFn& f) {
  if (!f.is_monotone())
    throw std::invalid_argument("boundary_profile requires a monotone function");
  unsigned n = f.arity();
  LevelProfile p;
  p.arity = n;
  p.counts.assign(n, std::vector<std::uint64_t>(n, 0));
  for (unsigned c = 0; c < n; ++c) {
    std::uint64_t bit = std::uint64_t(1) << c;
    for (std::uint64_t x = 0; x < f.size(); ++x) {
      if (x & bit) continue;
      if (!f.get(x) && f.get(x | bit))
        ++p.counts[c][static_cast<unsigned>(std::popcount(x))];
    }
  }
  return p;
}

bool sandwich_check(const BoolFn& f, unsigned coord, std::uint64_t s1,
                    std::uint64_t s2) {
  std::uint64_t bit = std::uint64_t(1) << coord;
  if ((s1 & ~s2) != 0) throw std::invalid_argument("S1 must be a subset of S2");
  if ((s1 | s2) & bit) throw std::invalid_argument("sets must avoid coord");
  if (s1 >= f.size() || s2 >= f.size())
    throw std::invalid_argument("set not encodable in arity bits");
  auto in_boundary = [&](std::uint64_t s) { return !f.get(s) && f.get(s | bit); };
  if (!in_boundary(s1) || !in_boundary(s2))
    throw std::invalid_argument("endpoints must lie in the boundary");
  // Walk every S between S1 and S2 (subsets of the difference, added to S1).
  std::uint64_t diff = s2 & ~s1;
  std::uint64_t sub = 0;
  for (;;) {
    if (!in_boundary(s1 | sub)) return false;
    if (sub == diff) break;
    sub = (sub - diff) & diff;  // next subset of diff
  }
  return true;
}

Rat biased_measure(const std::vector<std::uint64_t>& weight_hist,
                   unsigned arity, const Rat& p) {
  if (p < 0 || p > 1) throw std::invalid_argument("p out of [0, 1]");
  // sum_k W_k a^k (b-a)^{n-k} / b^n  with p = a/b in lowest terms.
  const Int& a = p.get_num();
  Int b = p.get_den();
  Int c = b - a;
  Int num(0);
  Int apow(1);
  std::vector<Int> cpow(arity + 1);
  cpow[0] = 1;
  for (unsigned k = 1; k <= arity; ++k) cpow[k] = cpow[k - 1] * c;
  for (unsigned k = 0; k <= arity; ++k) {
    if (weight_hist[k] != 0)
      num += Int(weight_hist[k]) * apow * cpow[arity - k];
    apow *= a;
  }
  Int den;
  mpz_pow_ui(den.get_mpz_t(), b.get_mpz_t(), arity);
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat biased_measure(const BoolFn& f, const Rat& p) {
  return biased_measure(f.weight_histogram(), f.arity(), p);
}

Rat default_tol() { return dyadic(40); }

RootBracket biased_root_bracket(const BoolFn& f, const Rat& target,
                                const Rat& tol) {
  if (f.is_constant())
    throw std::invalid_argument("P_p of a constant function never crosses");
  if (target <= 0 || target >= 1)
    throw std::invalid_argument("target must lie in (0, 1)");
  auto hist = f.weight_histogram();
  Rat lo(0), hi(1);
  while (hi - lo > tol) {
    Rat mid = (lo + hi) / 2;
    Rat v = biased_measure(hist, f.arity(), mid);
    if (v == target) return {mid, mid};
    if (v < target)
      lo = mid;
    else
      hi = mid;
  }
  return {lo, hi};
}

RootBracket critical_bracket(const BoolFn& f, const Rat& tol) {
  return biased_root_bracket(f, Rat(1, 2), tol);
}

Rat critical_probability(const BoolFn& f, const Rat& tol) {
  return critical_bracket(f, tol).mid();
}

std::pair<Rat, Rat> threshold_interval(const BoolFn& f, const Rat& eps,
                                       const Rat& tol) {
  if (eps <= 0 || eps >= Rat(1, 2))
    throw std::invalid_argument("eps must lie in (0, 1/2)");
  RootBracket a = biased_root_bracket(f, eps, tol);
  RootBracket b = biased_root_bracket(f, Rat(1) - eps, tol);
  // lo-side of the first root certifies P <= eps; hi-side of the second
  // certifies P >= 1 - eps.
  return {a.lo, b.hi};
}

Verdict russo_inequality_check(const BoolFn& f, const Rat& nu, const Rat& tol) {
  if (nu <= 0) throw std::invalid_argument("nu must be positive");
  Rat scale = Rat(1) / (4 * nu * nu);  // p1 = scale * p_c
  RootBracket pc = critical_bracket(f, tol);
  Rat half(1, 2);
  if (pc.lo > half) throw std::invalid_argument("precondition p_c <= 1/2 fails");
  if (!pc.exact() && pc.hi > half)
    throw std::invalid_argument("p_c <= 1/2 not certifiable at this tolerance");
  Rat p1_lo = scale * pc.lo, p1_hi = scale * pc.hi;
  if (p1_lo > half) throw std::invalid_argument("precondition p1 <= 1/2 fails");
  if (p1_hi > half)
    throw std::invalid_argument("p1 <= 1/2 not certifiable at this tolerance");
  Rat goal = Rat(1) - nu;
  if (scale == 1) return Verdict::kTrue;  // p1 = p_c exactly, P = 1/2 = 1 - nu
  auto hist = f.weight_histogram();
  if (biased_measure(hist, f.arity(), p1_lo) >= goal) return Verdict::kTrue;
  if (biased_measure(hist, f.arity(), p1_hi) < goal) return Verdict::kFalse;
  return Verdict::kIndeterminate;
}

}  // namespace minionlab
