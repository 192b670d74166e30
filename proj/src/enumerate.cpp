#include "minionlab/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace minionlab {

namespace {

// Fill points in an order compatible with the subset order (by popcount);
// at each point the value is forced to 1 when some one-bit-down neighbour is
// already 1, otherwise both branches are explored.
void enumerate_rec(BoolFn& f, const std::vector<std::uint64_t>& order,
                   std::size_t pos,
                   const std::function<void(const BoolFn&)>& visit) {
  if (pos == order.size()) {
    visit(f);
    return;
  }
  std::uint64_t x = order[pos];
  bool forced = false;
  for (unsigned c = 0; c < f.arity() && !forced; ++c) {
    std::uint64_t bit = std::uint64_t(1) << c;
    if ((x & bit) && f.get(x & ~bit)) forced = true;
  }
  if (forced) {
    f.set(x, true);
    enumerate_rec(f, order, pos + 1, visit);
    f.set(x, false);
    return;
  }
  f.set(x, false);
  enumerate_rec(f, order, pos + 1, visit);
  f.set(x, true);
  enumerate_rec(f, order, pos + 1, visit);
  f.set(x, false);
}

}  // namespace

void for_each_monotone(unsigned arity,
                       const std::function<void(const BoolFn&)>& visit) {
  if (arity > 5)
    throw std::invalid_argument("for_each_monotone supports arity <= 5");
  BoolFn f(arity);
  std::vector<std::uint64_t> order(f.size());
  std::iota(order.begin(), order.end(), std::uint64_t(0));
  std::stable_sort(order.begin(), order.end(),
                   [](std::uint64_t a, std::uint64_t b) {
                     return std::popcount(a) < std::popcount(b);
                   });
  enumerate_rec(f, order, 0, visit);
}

std::uint64_t count_monotone(unsigned arity) {
  std::uint64_t n = 0;
  for_each_monotone(arity, [&](const BoolFn&) { ++n; });
  return n;
}

BoolFn upward_closure(const BoolFn& f) {
  BoolFn g = f;
  for (unsigned c = 0; c < g.arity(); ++c) {
    std::uint64_t bit = std::uint64_t(1) << c;
    for (std::uint64_t x = 0; x < g.size(); ++x)
      if (!(x & bit) && g.get(x)) g.set(x | bit, true);
  }
  return g;
}

BoolFn random_monotone(unsigned arity, Rng& rng, unsigned seeds) {
  if (seeds == 0) seeds = arity + 1 + static_cast<unsigned>(rng.below(arity + 2));
  BoolFn f(arity);
  for (unsigned s = 0; s < seeds; ++s) f.set(rng.below(f.size()), true);
  return upward_closure(f);
}

}  // namespace minionlab
