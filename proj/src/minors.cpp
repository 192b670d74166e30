#include "minionlab/minors.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace minionlab {

void VarMap::validate() const {
  if (image.size() != from_arity)
    throw std::invalid_argument("VarMap image size != from_arity");
  if (to_arity == 0 || to_arity > from_arity)
    throw std::invalid_argument("VarMap arities out of order");
  for (unsigned v : image)
    if (v >= to_arity) throw std::invalid_argument("VarMap entry out of range");
}

bool VarMap::is_two_to_one() const {
  if (from_arity != 2 * to_arity) return false;
  std::vector<unsigned> hits(to_arity, 0);
  for (unsigned v : image) {
    if (v >= to_arity) return false;
    ++hits[v];
  }
  return std::all_of(hits.begin(), hits.end(),
                     [](unsigned h) { return h == 2; });
}

std::vector<std::vector<unsigned>> VarMap::preimages() const {
  std::vector<std::vector<unsigned>> pre(to_arity);
  for (unsigned i = 0; i < from_arity; ++i) pre[image[i]].push_back(i);
  return pre;
}

BoolFn apply_minor(const BoolFn& f, const VarMap& pi) {
  pi.validate();
  if (pi.from_arity != f.arity())
    throw std::invalid_argument("minor map does not match function arity");
  // Precompute, per output coordinate, the mask of f-inputs it drives.
  std::vector<std::uint64_t> masks(pi.to_arity, 0);
  for (unsigned i = 0; i < pi.from_arity; ++i)
    masks[pi.image[i]] |= std::uint64_t(1) << i;
  BoolFn g(pi.to_arity);
  for (std::uint64_t x = 0; x < g.size(); ++x) {
    std::uint64_t z = 0;
    for (unsigned c = 0; c < pi.to_arity; ++c)
      if ((x >> c) & 1) z |= masks[c];
    g.set(x, f.get(z));
  }
  return g;
}

VarMap compose(const VarMap& rho, const VarMap& pi) {
  pi.validate();
  rho.validate();
  if (rho.from_arity != pi.to_arity)
    throw std::invalid_argument("compose: arity mismatch");
  VarMap r;
  r.from_arity = pi.from_arity;
  r.to_arity = rho.to_arity;
  r.image.resize(pi.from_arity);
  for (unsigned i = 0; i < pi.from_arity; ++i)
    r.image[i] = rho.image[pi.image[i]];
  return r;
}

VarMap sample_two_to_one(unsigned m, Rng& rng) {
  if (m == 0) throw std::invalid_argument("m must be >= 1");
  std::vector<unsigned> order(2 * m);
  std::iota(order.begin(), order.end(), 0u);
  rng.shuffle(order);
  VarMap pi;
  pi.from_arity = 2 * m;
  pi.to_arity = m;
  pi.image.resize(2 * m);
  for (unsigned out = 0; out < m; ++out) {
    pi.image[order[2 * out]] = out;
    pi.image[order[2 * out + 1]] = out;
  }
  return pi;
}

VarMap sample_two_to_one(unsigned m, std::uint64_t seed) {
  Rng rng(seed);
  return sample_two_to_one(m, rng);
}

std::vector<std::vector<std::pair<unsigned, unsigned>>> perfect_matchings(
    unsigned k) {
  std::vector<std::vector<std::pair<unsigned, unsigned>>> out;
  std::vector<std::pair<unsigned, unsigned>> cur;
  std::vector<bool> used(2 * k, false);
  // Always pair the smallest unused element next; each matching appears once.
  auto rec = [&](auto&& self) -> void {
    unsigned a = 0;
    while (a < 2 * k && used[a]) ++a;
    if (a == 2 * k) {
      out.push_back(cur);
      return;
    }
    used[a] = true;
    for (unsigned b = a + 1; b < 2 * k; ++b) {
      if (used[b]) continue;
      used[b] = true;
      cur.emplace_back(a, b);
      self(self);
      cur.pop_back();
      used[b] = false;
    }
    used[a] = false;
  };
  if (k > 0) rec(rec);
  if (k == 0) out.push_back({});
  return out;
}

std::vector<VarMap> enumerate_two_to_one(unsigned m) {
  if (m == 0 || m > 4)
    throw std::invalid_argument("enumerate_two_to_one supports m in [1, 4]");
  std::vector<VarMap> out;
  auto matchings = perfect_matchings(m);
  std::vector<unsigned> label(m);
  std::iota(label.begin(), label.end(), 0u);
  for (const auto& match : matchings) {
    // Every assignment of output labels to the m blocks.
    std::vector<unsigned> perm = label;
    do {
      VarMap pi;
      pi.from_arity = 2 * m;
      pi.to_arity = m;
      pi.image.resize(2 * m);
      for (unsigned b = 0; b < m; ++b) {
        pi.image[match[b].first] = perm[b];
        pi.image[match[b].second] = perm[b];
      }
      out.push_back(std::move(pi));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

VarMap collapse_map(unsigned arity, unsigned partner) {
  if (partner == 0 || partner >= arity)
    throw std::invalid_argument("partner out of range");
  VarMap pi;
  pi.from_arity = arity;
  pi.to_arity = arity - 1;
  pi.image.resize(arity);
  unsigned next = 1;
  for (unsigned i = 0; i < arity; ++i) {
    if (i == 0 || i == partner)
      pi.image[i] = 0;
    else
      pi.image[i] = next++;
  }
  return pi;
}

BoolFn pi1_collapse(const BoolFn& f) {
  if (f.arity() % 2 != 0 || f.arity() < 4)
    throw std::invalid_argument("pi1_collapse needs even arity >= 4");
  return apply_minor(f, collapse_map(f.arity(), 1));
}

namespace {

VarMap pairing_to_map(unsigned arity,
                      const std::vector<std::pair<unsigned, unsigned>>& match) {
  // Coordinates 1..arity-1 are matched; outputs 1..(arity-1)/2 are assigned
  // in order of each pair's smallest element (matchings arrive in that order).
  VarMap pi;
  pi.from_arity = arity;
  pi.to_arity = 1 + static_cast<unsigned>(match.size());
  pi.image.resize(arity);
  pi.image[0] = 0;
  for (unsigned b = 0; b < match.size(); ++b) {
    pi.image[match[b].first + 1] = b + 1;
    pi.image[match[b].second + 1] = b + 1;
  }
  return pi;
}

}  // namespace

std::pair<BoolFn, VarMap> pi2_pairing(const BoolFn& fprime,
                                      std::uint64_t seed) {
  unsigned arity = fprime.arity();
  if (arity % 2 == 0 || arity < 3)
    throw std::invalid_argument("pi2_pairing needs odd arity >= 3");
  Rng rng(seed);
  std::vector<unsigned> order(arity - 1);
  std::iota(order.begin(), order.end(), 0u);
  rng.shuffle(order);
  std::vector<std::pair<unsigned, unsigned>> match(order.size() / 2);
  for (unsigned b = 0; b < match.size(); ++b) {
    auto [x, y] = std::minmax(order[2 * b], order[2 * b + 1]);
    match[b] = {x, y};
  }
  std::sort(match.begin(), match.end());
  VarMap pi = pairing_to_map(arity, match);
  return {apply_minor(fprime, pi), pi};
}

std::vector<VarMap> enumerate_pairings(unsigned n) {
  if (n < 2 || n > 8)
    throw std::invalid_argument("enumerate_pairings supports n in [2, 8]");
  unsigned arity = 2 * n - 1;
  std::vector<VarMap> out;
  for (const auto& match : perfect_matchings(n - 1))
    out.push_back(pairing_to_map(arity, match));
  return out;
}

}  // namespace minionlab
