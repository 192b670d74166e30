#include "minionlab/pair_density.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <vector>

namespace minionlab {

Rat boundary_pair_density(const BoolFn& f, unsigned i, unsigned j,
                          unsigned coord) {
  unsigned n = f.arity();
  if (coord >= n) throw std::invalid_argument("coord out of range");
  if (!(i < j) || j > n - 1)
    throw std::invalid_argument("levels must satisfy 0 <= i < j <= n-1");
  if (!f.is_monotone())
    throw std::invalid_argument("boundary_pair_density requires monotone input");
  std::uint64_t bit = std::uint64_t(1) << coord;
  auto in_boundary = [&](std::uint64_t s) { return !f.get(s) && f.get(s | bit); };
  Int count(0);
  for (std::uint64_t t = 0; t < f.size(); ++t) {
    if (t & bit) continue;
    if (static_cast<unsigned>(std::popcount(t)) != j) continue;
    if (!in_boundary(t)) continue;
    std::uint64_t s = 0;
    for (;;) {
      if (static_cast<unsigned>(std::popcount(s)) == i && in_boundary(s))
        ++count;
      if (s == t) break;
      s = (s - t) & t;
    }
  }
  Rat r(count, binomial(n - 1, i) * binomial(n - 1 - i, j - i));
  r.canonicalize();
  return r;
}

Rat even_level_mass(const LevelProfile& profile, unsigned coord) {
  Rat sum(0);
  for (unsigned j = 0; j < profile.arity; j += 2) sum += profile.density(coord, j);
  return sum / ((profile.arity + 1) / 2);
}

Rat even_level_mass(const BoolFn& f, unsigned coord) {
  if (coord >= f.arity()) throw std::invalid_argument("coord out of range");
  return even_level_mass(boundary_profile(f), coord);
}

EvenMassReport verify_even_mass(const BoolFn& f, unsigned coord) {
  LevelProfile p = boundary_profile(f);
  EvenMassReport r;
  r.phi = p.shapley(coord);
  unsigned half = (f.arity() + 1) / 2;
  r.premise_met = r.phi * half >= 1;  // phi >= 1/n with n the half arity
  r.mass = even_level_mass(p, coord);
  r.positive = r.mass > 0;
  if (r.phi > 0) r.ratio = r.mass / (r.phi * r.phi);
  return r;
}

ChainStats chain_stats(const BoolFn& f, unsigned coord) {
  unsigned n = f.arity();
  if (n > 7) throw std::invalid_argument("chain_stats supports arity <= 7");
  if (!f.is_monotone())
    throw std::invalid_argument("chain_stats requires monotone input");
  std::uint64_t bit = std::uint64_t(1) << coord;
  auto in_boundary = [&](std::uint64_t s) { return !f.get(s) && f.get(s | bit); };
  std::vector<unsigned> others;
  for (unsigned c = 0; c < n; ++c)
    if (c != coord) others.push_back(c);
  std::sort(others.begin(), others.end());
  Int chains(0), hits(0), hit_pairs(0);
  do {
    ++chains;
    unsigned x = 0;
    std::uint64_t s = 0;
    if (in_boundary(s)) ++x;  // the empty prefix
    for (unsigned c : others) {
      s |= std::uint64_t(1) << c;
      if (in_boundary(s)) ++x;
    }
    hits += x;
    hit_pairs += Int(x) * (x - 1) / 2;
  } while (std::next_permutation(others.begin(), others.end()));

  ChainStats st;
  st.expected_hits = Rat(hits, chains);
  st.expected_hits.canonicalize();
  st.expected_hit_pairs = Rat(hit_pairs, chains);
  st.expected_hit_pairs.canonicalize();
  st.pair_density_total = 0;
  for (unsigned i = 0; i + 1 <= n - 1; ++i)
    for (unsigned j = i + 1; j <= n - 1; ++j)
      st.pair_density_total += boundary_pair_density(f, i, j, coord);
  return st;
}

}  // namespace minionlab
