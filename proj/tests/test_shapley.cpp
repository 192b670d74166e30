#include <cmath>

#include "doctest.h"

#include "minionlab/enumerate.hpp"
#include "minionlab/shapley.hpp"
#include "oracles.hpp"

using namespace minionlab;

TEST_CASE("exact Shapley on symmetric and dictator functions") {
  ShapleyVector maj = shapley_exact(BoolFn::threshold(3, 2));
  for (unsigned i = 0; i < 3; ++i) CHECK(maj.values[i] == Rat(1, 3));

  ShapleyVector dict = shapley_exact(BoolFn::dictator(5, 0));
  CHECK(dict.values[0] == Rat(1));
  for (unsigned i = 1; i < 5; ++i) CHECK(dict.values[i] == Rat(0));

  for (unsigned L = 2; L <= 6; ++L)
    for (unsigned tau = 1; tau <= L; ++tau) {
      ShapleyVector phi = shapley_exact(BoolFn::threshold(L, tau));
      for (unsigned i = 0; i < L; ++i) CHECK(phi.values[i] == Rat(1, L));
    }
}

TEST_CASE("exact Shapley equals the permutation oracle") {
  for (unsigned n = 1; n <= 4; ++n) {
    for_each_monotone(n, [&](const BoolFn& f) {
      ShapleyVector phi = shapley_exact(f);
      auto oracle = oracles::shapley_by_permutations(f);
      for (unsigned i = 0; i < n; ++i) CHECK(phi.values[i] == oracle[i]);
    });
  }
  Rng rng(41);
  for (int it = 0; it < 25; ++it) {
    unsigned n = 5 + static_cast<unsigned>(rng.below(3));  // 5..7
    BoolFn f = random_monotone(n, rng);
    ShapleyVector phi = shapley_exact(f);
    auto oracle = oracles::shapley_by_permutations(f);
    for (unsigned i = 0; i < n; ++i) CHECK(phi.values[i] == oracle[i]);
  }
}

TEST_CASE("Shapley values sum to one for non-constant monotone functions") {
  for (unsigned n = 1; n <= 4; ++n) {
    for_each_monotone(n, [&](const BoolFn& f) {
      ShapleyVector phi = shapley_exact(f);
      CHECK(phi.sum() == (f.is_constant() ? Rat(0) : Rat(1)));
    });
  }
  Rng rng(43);
  for (int it = 0; it < 200; ++it) {
    unsigned n = 5 + static_cast<unsigned>(rng.below(6));  // 5..10
    BoolFn f = random_monotone(n, rng);
    if (f.is_constant()) continue;
    CHECK(shapley_exact(f).sum() == Rat(1));
  }
}

TEST_CASE("Monte-Carlo Shapley") {
  // dictator: the pivot is always coordinate 1
  McShapley dict = shapley_montecarlo(BoolFn::dictator(4, 0), 500, 99);
  CHECK(dict.estimate(0) == Rat(1));
  for (unsigned i = 1; i < 4; ++i) CHECK(dict.estimate(i) == Rat(0));

  McShapley maj = shapley_montecarlo(BoolFn::threshold(3, 2), 100000, 7);
  for (unsigned i = 0; i < 3; ++i) CHECK(maj.covers(i, Rat(1, 3)));

  // estimates are reproducible and independent of nothing but (f, m, seed)
  McShapley again = shapley_montecarlo(BoolFn::threshold(3, 2), 100000, 7);
  CHECK(again.pivots == maj.pivots);

  // statistical calibration on a small function across seeds
  BoolFn f = BoolFn::threshold(5, 3);
  ShapleyVector exact = shapley_exact(f);
  int covered = 0, total = 0;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    McShapley mc = shapley_montecarlo(f, 2000, seed);
    for (unsigned i = 0; i < 5; ++i) {
      ++total;
      if (mc.covers(i, exact.values[i])) ++covered;
    }
  }
  CHECK(covered >= total * 98 / 100);
}

TEST_CASE("decode") {
  DecodeSet d = decode(BoolFn::dictator(4, 0), Rat(1, 2));
  CHECK(d.coords == std::vector<unsigned>{0});
  CHECK_FALSE(d.used_fallback);

  // MAJ3 at lambda = 1/2: empty threshold set, argmax fallback, smallest index
  DecodeSet m = decode(BoolFn::threshold(3, 2), Rat(1, 2));
  CHECK(m.coords == std::vector<unsigned>{0});
  CHECK(m.used_fallback);

  DecodeSet c = decode(BoolFn::constant(3, false), Rat(1, 4));
  CHECK(c.coords.empty());

  // |S| <= floor(1/lambda) for non-constant monotone functions
  Rng rng(17);
  for (int it = 0; it < 50; ++it) {
    unsigned n = 2 + static_cast<unsigned>(rng.below(6));
    BoolFn f = random_monotone(n, rng);
    if (f.is_constant()) continue;
    for (Rat lambda : {Rat(1, 2), Rat(1, 3), Rat(1, 7)}) {
      DecodeSet s = decode(f, lambda);
      if (!s.used_fallback)
        CHECK(Rat(static_cast<long>(s.coords.size())) * lambda <= Rat(1));
    }
  }
}

TEST_CASE("constant functions get the all-zero vector") {
  ShapleyVector z = shapley_exact(BoolFn::constant(4, true));
  CHECK(z.sum() == Rat(0));
}
