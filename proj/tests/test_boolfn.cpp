#include "doctest.h"

#include "minionlab/boolfn.hpp"
#include "minionlab/enumerate.hpp"
#include "minionlab/rng.hpp"
#include "oracles.hpp"

using namespace minionlab;

namespace {

BoolFn parity2() {
  BoolFn f(2);
  f.set(1, true);
  f.set(2, true);
  return f;
}

}  // namespace

TEST_CASE("evaluate on thresholds and constants") {
  BoolFn thr32 = BoolFn::threshold(3, 2);
  CHECK(thr32.get(0b011));  // {1,2}: hw 2 >= 2
  CHECK_FALSE(thr32.get(0b100));  // {3}: hw 1
  BoolFn zero = BoolFn::constant(4, false);
  for (std::uint64_t x = 0; x < zero.size(); ++x) CHECK_FALSE(zero.get(x));
}

TEST_CASE("is_monotone") {
  CHECK(BoolFn::threshold(3, 2).is_monotone());
  CHECK_FALSE(parity2().is_monotone());
  for (unsigned L = 1; L <= 6; ++L)
    for (unsigned tau = 0; tau <= L; ++tau)
      CHECK(BoolFn::threshold(L, tau).is_monotone());
}

TEST_CASE("make_threshold") {
  BoolFn maj3 = BoolFn::threshold(3, 2);
  // table of MAJ3: ones at indices 3, 5, 6, 7
  for (std::uint64_t x = 0; x < 8; ++x)
    CHECK(maj3.get(x) == (x == 3 || x == 5 || x == 6 || x == 7));
  CHECK(BoolFn::threshold(5, 0) == BoolFn::constant(5, true));
  BoolFn thr42 = BoolFn::threshold(4, 2);
  CHECK(thr42.get(0b1001));       // {1,4}
  CHECK_FALSE(thr42.get(0b0001));  // {1}
  CHECK_THROWS_AS(BoolFn::threshold(3, 4), std::invalid_argument);
}

TEST_CASE("boundary_profile on dictators and constants") {
  BoolFn dict = BoolFn::dictator(3, 0);
  LevelProfile p = boundary_profile(dict);
  for (unsigned j = 0; j < 3; ++j) {
    CHECK(p.density(0, j) == Rat(1));
    CHECK(p.density(1, j) == Rat(0));
    CHECK(p.density(2, j) == Rat(0));
  }
  LevelProfile z = boundary_profile(BoolFn::constant(3, false));
  for (unsigned c = 0; c < 3; ++c)
    for (unsigned j = 0; j < 3; ++j) CHECK(z.counts[c][j] == 0);
  CHECK_THROWS_AS(boundary_profile(parity2()), std::invalid_argument);
}

TEST_CASE("boundary_profile matches the subset-scan oracle") {
  // MAJ3 first: both singletons {2},{3} flip coordinate 1, so mu(1) = 1.
  BoolFn maj3 = BoolFn::threshold(3, 2);
  LevelProfile p = boundary_profile(maj3);
  CHECK(p.density(0, 0) == Rat(0));
  CHECK(p.density(0, 1) == oracles::boundary_density(maj3, 0, 1));
  CHECK(p.density(0, 1) == Rat(1));
  CHECK(p.density(0, 2) == Rat(0));

  Rng rng(7);
  for (int it = 0; it < 40; ++it) {
    unsigned n = 2 + static_cast<unsigned>(rng.below(5));  // up to 6
    BoolFn f = random_monotone(n, rng);
    LevelProfile lp = boundary_profile(f);
    for (unsigned c = 0; c < n; ++c)
      for (unsigned j = 0; j < n; ++j)
        CHECK(lp.counts[c][j] == oracles::boundary_count(f, c, j));
  }
}

TEST_CASE("sandwich property holds on monotone functions") {
  BoolFn maj5 = BoolFn::threshold(5, 3);
  // S1 = S2 = {2,3} (0-based mask 0b00110) is in the boundary of coord 1.
  CHECK(sandwich_check(maj5, 0, 0b00110, 0b00110));

  // Exhaustive: every monotone function of arity <= 4, every coordinate,
  // every nested boundary pair.
  for (unsigned n = 2; n <= 4; ++n) {
    for_each_monotone(n, [&](const BoolFn& f) {
      for (unsigned c = 0; c < n; ++c) {
        std::uint64_t bit = std::uint64_t(1) << c;
        std::vector<std::uint64_t> boundary;
        for (std::uint64_t s = 0; s < f.size(); ++s)
          if (!(s & bit) && !f.get(s) && f.get(s | bit)) boundary.push_back(s);
        for (auto s1 : boundary)
          for (auto s2 : boundary)
            if ((s1 & ~s2) == 0) CHECK(sandwich_check(f, c, s1, s2));
      }
    });
  }

  // Sampled at arity 5.
  Rng rng(11);
  for (int it = 0; it < 25; ++it) {
    BoolFn f = random_monotone(5, rng);
    for (unsigned c = 0; c < 5; ++c) {
      std::uint64_t bit = std::uint64_t(1) << c;
      std::vector<std::uint64_t> boundary;
      for (std::uint64_t s = 0; s < f.size(); ++s)
        if (!(s & bit) && !f.get(s) && f.get(s | bit)) boundary.push_back(s);
      for (auto s1 : boundary)
        for (auto s2 : boundary)
          if ((s1 & ~s2) == 0) CHECK(sandwich_check(f, c, s1, s2));
    }
  }
}

TEST_CASE("sandwich_check validates its preconditions") {
  BoolFn maj3 = BoolFn::threshold(3, 2);
  CHECK_THROWS_AS(sandwich_check(maj3, 0, 0b110, 0b010), std::invalid_argument);
  CHECK_THROWS_AS(sandwich_check(maj3, 0, 0b001, 0b001), std::invalid_argument);
  // empty set is not in MAJ3's boundary of coordinate 1
  CHECK_THROWS_AS(sandwich_check(maj3, 0, 0, 0), std::invalid_argument);
}

TEST_CASE("biased_measure basics and oracle identity") {
  Rat p(3, 10);
  CHECK(biased_measure(BoolFn::constant(4, true), p) == Rat(1));
  CHECK(biased_measure(BoolFn::dictator(5, 0), p) == p);
  CHECK(biased_measure(BoolFn::threshold(3, 2), Rat(1, 2)) == Rat(1, 2));
  CHECK_THROWS_AS(biased_measure(BoolFn::dictator(2, 0), Rat(3, 2)),
                  std::invalid_argument);

  Rng rng(23);
  for (int it = 0; it < 20; ++it) {
    unsigned n = 2 + static_cast<unsigned>(rng.below(7));  // up to 8
    BoolFn f = random_monotone(n, rng);
    Rat q(Int(rng.below(100)), Int(100));
    q.canonicalize();
    CHECK(biased_measure(f, q) == oracles::biased_measure_pointwise(f, q));
  }
}

TEST_CASE("critical probability") {
  Rat tol = default_tol();
  CHECK(critical_probability(BoolFn::threshold(3, 2), tol) == Rat(1, 2));
  CHECK(critical_probability(BoolFn::dictator(4, 0), tol) == Rat(1, 2));
  for (unsigned k = 1; k <= 5; ++k) {
    RootBracket b = critical_bracket(BoolFn::threshold(2 * k + 1, k + 1), tol);
    CHECK(b.lo <= Rat(1, 2));
    CHECK(b.hi >= Rat(1, 2));
    CHECK(b.hi - b.lo <= tol);
  }
  // AND2: p_c solves p^2 = 1/2
  RootBracket b = critical_bracket(BoolFn::threshold(2, 2), tol);
  CHECK(b.lo * b.lo <= Rat(1, 2));
  CHECK(b.hi * b.hi >= Rat(1, 2));
  CHECK(b.hi - b.lo <= tol);
  CHECK(std::abs(rat_double(b.mid()) - 0.70710678118654752) < 1e-9);
  CHECK_THROWS_AS(critical_bracket(BoolFn::constant(3, true), tol),
                  std::invalid_argument);
}

TEST_CASE("threshold_interval") {
  Rat tol = default_tol();
  auto [p1, p2] = threshold_interval(BoolFn::dictator(3, 0), Rat(1, 4), tol);
  CHECK(p1 == Rat(1, 4));
  CHECK(p2 == Rat(3, 4));

  // self-duality of MAJ3 mirrors the two bisections exactly
  auto [q1, q2] = threshold_interval(BoolFn::threshold(3, 2), Rat(1, 5), tol);
  CHECK(q2 == Rat(1) - q1);
  CHECK(q1 <= q2);

  auto [r1, r2] = threshold_interval(BoolFn::threshold(9, 5), Rat(1, 8), tol);
  CHECK(r2 - r1 < Rat(3, 4));  // strictly narrower than the dictator window
  CHECK(biased_measure(BoolFn::threshold(9, 5), r1) <= Rat(1, 8));
  CHECK(biased_measure(BoolFn::threshold(9, 5), r2) >= Rat(7, 8));
}

TEST_CASE("dual") {
  for (unsigned L = 2; L <= 6; ++L)
    CHECK(BoolFn::threshold(L, 1).dual() == BoolFn::threshold(L, L));
  CHECK(BoolFn::threshold(3, 2).dual() == BoolFn::threshold(3, 2));
  CHECK(BoolFn::constant(4, false).dual() == BoolFn::constant(4, true));

  Rng rng(5);
  for (int it = 0; it < 20; ++it) {
    unsigned n = 2 + static_cast<unsigned>(rng.below(6));
    BoolFn f = random_monotone(n, rng);
    CHECK(f.dual().is_monotone());
    Rat p(Int(rng.below(50)), Int(49 + rng.below(50)));
    p.canonicalize();
    CHECK(biased_measure(f.dual(), p) == Rat(1) - biased_measure(f, Rat(1) - p));
  }
}

TEST_CASE("russo inequality check") {
  Rat tol = default_tol();
  // dictator with nu = 1/4: p1 = 4 p_c = 2 > 1/2, precondition fails
  CHECK_THROWS_AS(russo_inequality_check(BoolFn::dictator(3, 0), Rat(1, 4), tol),
                  std::invalid_argument);
  CHECK(russo_inequality_check(BoolFn::threshold(20, 2), Rat(1, 2), tol) ==
        Verdict::kTrue);
  CHECK(russo_inequality_check(BoolFn::threshold(20, 2), Rat(1, 4), tol) ==
        Verdict::kTrue);

  // exhaustive small-arity sweep: no certified counterexample
  for (unsigned n = 1; n <= 4; ++n) {
    for_each_monotone(n, [&](const BoolFn& f) {
      if (f.is_constant()) return;
      for (Rat nu : {Rat(1, 2), Rat(1, 4), Rat(1, 8)}) {
        try {
          Verdict v = russo_inequality_check(f, nu, tol);
          CHECK(v != Verdict::kFalse);
        } catch (const std::invalid_argument&) {
          // preconditions unmet for this function; skip
        }
      }
    });
  }
}

TEST_CASE("monotone enumeration matches the Dedekind counts") {
  CHECK(count_monotone(1) == 3);
  CHECK(count_monotone(2) == 6);
  CHECK(count_monotone(3) == 20);
  CHECK(count_monotone(4) == 168);
  for_each_monotone(3, [](const BoolFn& f) { CHECK(f.is_monotone()); });
}

TEST_CASE("arity cap is enforced") {
  CHECK_THROWS_AS(BoolFn(BoolFn::arity_cap() + 1), std::invalid_argument);
  CHECK_THROWS_AS(BoolFn(0), std::invalid_argument);
}
