#include "doctest.h"

#include "minionlab/blp_aip.hpp"
#include "minionlab/rng.hpp"

using namespace minionlab;

namespace {

// --- test-only oracles -----------------------------------------------------

// Rational Gaussian elimination: returns (consistent, independent row ids).
std::pair<bool, std::vector<unsigned>> row_reduce(
    std::vector<std::vector<Rat>> a, std::vector<Rat> b) {
  unsigned m = static_cast<unsigned>(a.size());
  unsigned n = m ? static_cast<unsigned>(a[0].size()) : 0;
  std::vector<unsigned> rows(m);
  for (unsigned i = 0; i < m; ++i) rows[i] = i;
  std::vector<unsigned> indep;
  unsigned r = 0;
  for (unsigned c = 0; c < n && r < m; ++c) {
    unsigned p = r;
    while (p < m && a[p][c] == 0) ++p;
    if (p == m) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    std::swap(rows[p], rows[r]);
    for (unsigned i = 0; i < m; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rat f = a[i][c] / a[r][c];
      for (unsigned j = 0; j < n; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    indep.push_back(rows[r]);
    ++r;
  }
  for (unsigned i = r; i < m; ++i)
    if (b[i] != 0) return {false, {}};
  return {true, indep};
}

// Feasibility of {x >= 0 : Ax = b} by enumerating basic solutions; also
// returns the union of supports over basic feasible solutions.
std::pair<bool, std::vector<char>> vertex_oracle(const LpProblem& p) {
  auto [consistent, indep] = row_reduce(p.rows, p.rhs);
  if (!consistent) return {false, {}};
  unsigned r = static_cast<unsigned>(indep.size());
  unsigned n = p.num_vars;
  std::vector<char> support(n, 0);
  bool feasible = false;
  if (r == 0) return {true, support};  // only x = 0 ... any x>=0 works; x=0
  std::vector<unsigned> cols(r);
  // enumerate all r-subsets of columns
  for (unsigned i = 0; i < r; ++i) cols[i] = i;
  for (;;) {
    // solve the square system on these columns
    std::vector<std::vector<Rat>> a(r, std::vector<Rat>(r));
    std::vector<Rat> b(r);
    for (unsigned i = 0; i < r; ++i) {
      for (unsigned j = 0; j < r; ++j) a[i][j] = p.rows[indep[i]][cols[j]];
      b[i] = p.rhs[indep[i]];
    }
    // gaussian solve
    bool singular = false;
    for (unsigned c = 0; c < r && !singular; ++c) {
      unsigned piv = c;
      while (piv < r && a[piv][c] == 0) ++piv;
      if (piv == r) {
        singular = true;
        break;
      }
      std::swap(a[piv], a[c]);
      std::swap(b[piv], b[c]);
      for (unsigned i = 0; i < r; ++i) {
        if (i == c || a[i][c] == 0) continue;
        Rat f = a[i][c] / a[c][c];
        for (unsigned j = 0; j < r; ++j) a[i][j] -= f * a[c][j];
        b[i] -= f * b[c];
      }
    }
    if (!singular) {
      bool nonneg = true;
      std::vector<Rat> x(r);
      for (unsigned i = 0; i < r; ++i) {
        x[i] = b[i] / a[i][i];
        if (x[i] < 0) nonneg = false;
      }
      if (nonneg) {
        feasible = true;
        for (unsigned i = 0; i < r; ++i)
          if (x[i] > 0) support[cols[i]] = 1;
      }
    }
    // next subset
    int i = static_cast<int>(r) - 1;
    while (i >= 0 && cols[i] == n - r + i) --i;
    if (i < 0) break;
    ++cols[i];
    for (unsigned j = i + 1; j < r; ++j) cols[j] = cols[j - 1] + 1;
  }
  return {feasible, support};
}

Instance random_ordered_instance(Rng& rng, unsigned max_vars,
                                 unsigned max_cons, const Template& t) {
  Instance inst;
  inst.num_vars = 3 + static_cast<unsigned>(rng.below(max_vars - 2));
  unsigned m = 1 + static_cast<unsigned>(rng.below(max_cons));
  for (unsigned c = 0; c < m; ++c) {
    Constraint con;
    con.pair_index = static_cast<unsigned>(rng.below(t.pairs.size()));
    unsigned k = t.pairs[con.pair_index].A.k;
    for (unsigned p = 0; p < k; ++p)
      con.scope.push_back(static_cast<unsigned>(rng.below(inst.num_vars)));
    inst.constraints.push_back(con);
  }
  return inst;
}

}  // namespace

TEST_CASE("integer solver basics") {
  // 2a = 1 has no integer solution
  IntSystem parity;
  parity.num_vars = 1;
  parity.rows = {{Int(2)}};
  parity.rhs = {Int(1)};
  CHECK_FALSE(solve_integer_system(parity).has_value());

  // 2a + 3b = 1 does
  IntSystem bezout;
  bezout.num_vars = 2;
  bezout.rows = {{Int(2), Int(3)}};
  bezout.rhs = {Int(1)};
  auto sol = solve_integer_system(bezout);
  REQUIRE(sol.has_value());
  CHECK(Int(2) * (*sol)[0] + Int(3) * (*sol)[1] == 1);

  // inconsistent zero row
  IntSystem zero;
  zero.num_vars = 2;
  zero.rows = {{Int(1), Int(1)}, {Int(2), Int(2)}};
  zero.rhs = {Int(1), Int(3)};
  CHECK_FALSE(solve_integer_system(zero).has_value());
}

TEST_CASE("integer solver vs bounded box search") {
  Rng rng(101);
  for (int it = 0; it < 300; ++it) {
    IntSystem sys;
    sys.num_vars = 3;
    unsigned m = 1 + static_cast<unsigned>(rng.below(3));
    for (unsigned i = 0; i < m; ++i) {
      std::vector<Int> row;
      for (unsigned j = 0; j < 3; ++j)
        row.push_back(Int(static_cast<long>(rng.below(7)) - 3));
      sys.rows.push_back(row);
      sys.rhs.push_back(Int(static_cast<long>(rng.below(9)) - 4));
    }
    auto sol = solve_integer_system(sys);
    if (sol.has_value()) {
      for (unsigned i = 0; i < m; ++i) {
        Int acc(0);
        for (unsigned j = 0; j < 3; ++j) acc += sys.rows[i][j] * (*sol)[j];
        CHECK(acc == sys.rhs[i]);
      }
    } else {
      // no small witness may exist either
      for (long a = -5; a <= 5; ++a)
        for (long b = -5; b <= 5; ++b)
          for (long c = -5; c <= 5; ++c) {
            bool all = true;
            for (unsigned i = 0; i < m && all; ++i)
              if (sys.rows[i][0] * a + sys.rows[i][1] * b +
                      sys.rows[i][2] * c !=
                  sys.rhs[i])
                all = false;
            CHECK_FALSE(all);
          }
    }
  }
}

TEST_CASE("simplex agrees with the basic-solution oracle on tiny systems") {
  Template ordered = ordered_one_in_three_template();
  Rng rng(55);
  unsigned checked = 0;
  for (int it = 0; it < 40; ++it) {
    Instance inst = random_ordered_instance(rng, 3, 2, ordered);
    RelaxationSystem sys = build_relaxation(inst, ordered);
    LpProblem lp = sys.lp();
    if (lp.num_vars > 13) continue;
    auto [oracle_feasible, oracle_support] = vertex_oracle(lp);
    BlpResult blp = solve_blp(sys);
    CHECK(blp.feasible == oracle_feasible);
    if (blp.feasible) {
      ++checked;
      CHECK(blp.support == oracle_support);
      // interior point is positive exactly on the support
      for (unsigned w = 0; w < lp.num_vars; ++w)
        CHECK((blp.interior[w] > 0) == (oracle_support[w] == 1));
      // and satisfies every equation exactly
      for (unsigned e = 0; e < lp.rows.size(); ++e) {
        Rat acc(0);
        for (unsigned w = 0; w < lp.num_vars; ++w)
          acc += lp.rows[e][w] * blp.interior[w];
        CHECK(acc == lp.rhs[e]);
      }
    }
  }
  CHECK(checked > 5);
}

TEST_CASE("self-disequality is infeasible") {
  Template t;
  t.pairs.push_back({neq_relation(), neq_relation()});
  Instance inst;
  inst.num_vars = 1;
  inst.constraints.push_back({0, {0, 0}});
  DecideVerdict v = decide(inst, t);
  CHECK_FALSE(v.blp_feasible);
  CHECK_FALSE(v.accept);
}

TEST_CASE("empty strong relation rejects") {
  Template t;
  t.pairs.push_back({Relation{2, 0}, implication_relation()});
  Instance inst;
  inst.num_vars = 2;
  inst.constraints.push_back({0, {0, 1}});
  DecideVerdict v = decide(inst, t);
  CHECK_FALSE(v.accept);
  CHECK_FALSE(v.blp_feasible);
}

TEST_CASE("decide against the brute-force oracle") {
  Template ordered = ordered_one_in_three_template();
  Rng rng(77);
  unsigned accepts = 0, rejects = 0;
  for (int it = 0; it < 80; ++it) {
    Instance inst = random_ordered_instance(rng, 8, 6, ordered);
    DecideVerdict v = decide(inst, ordered);
    if (v.accept) {
      ++accepts;
      CHECK(brute_force_decide(inst, ordered, Side::weak));
    } else {
      ++rejects;
      CHECK_FALSE(brute_force_decide(inst, ordered, Side::strong));
    }
  }
  CHECK(accepts > 0);
  CHECK(rejects > 0);

  // strong-satisfiable instances are always accepted
  unsigned strong_seen = 0;
  for (int it = 0; it < 200 && strong_seen < 15; ++it) {
    Instance inst = random_ordered_instance(rng, 6, 4, ordered);
    if (!brute_force_decide(inst, ordered, Side::strong)) continue;
    ++strong_seen;
    CHECK(decide(inst, ordered).accept);
  }
  CHECK(strong_seen == 15);
}

TEST_CASE("decide is deterministic") {
  Template ordered = ordered_one_in_three_template();
  Rng rng(5);
  Instance inst = random_ordered_instance(rng, 6, 4, ordered);
  DecideVerdict a = decide(inst, ordered);
  DecideVerdict b = decide(inst, ordered);
  CHECK(a.accept == b.accept);
  CHECK(a.support_size == b.support_size);
}

TEST_CASE("empty instance accepts") {
  Template ordered = ordered_one_in_three_template();
  Instance inst;
  inst.num_vars = 2;
  DecideVerdict v = decide(inst, ordered);
  CHECK(v.accept);
}
