#include "minionlab/pcsp.hpp"

#include <bit>
#include <stdexcept>

namespace minionlab {

unsigned Relation::count() const {
  return static_cast<unsigned>(std::popcount(tuples));
}

std::vector<unsigned> Relation::members() const {
  std::vector<unsigned> ts;
  for (unsigned t = 0; t < (1u << k); ++t)
    if (contains(t)) ts.push_back(t);
  return ts;
}

Relation Relation::from_tuples(unsigned k, std::initializer_list<unsigned> ts) {
  if (k == 0 || k > kMaxArity) throw std::invalid_argument("relation arity");
  Relation r{k, 0};
  for (unsigned t : ts) {
    if (t >= (1u << k)) throw std::invalid_argument("tuple out of range");
    r.tuples |= std::uint64_t(1) << t;
  }
  return r;
}

Relation implication_relation() {
  return Relation::from_tuples(2, {0b00, 0b10, 0b11});
}
Relation one_in_three_relation() {
  return Relation::from_tuples(3, {0b001, 0b010, 0b100});
}
Relation nae_relation() {
  return Relation::from_tuples(3, {1, 2, 3, 4, 5, 6});
}
Relation neq_relation() { return Relation::from_tuples(2, {0b01, 0b10}); }

void Template::validate() const {
  if (pairs.empty()) throw std::invalid_argument("template has no pairs");
  for (const auto& p : pairs) {
    if (p.A.k != p.B.k || p.A.k == 0 || p.A.k > Relation::kMaxArity)
      throw std::invalid_argument("relation pair arity mismatch");
    if (p.A.tuples & ~p.B.tuples)
      throw std::invalid_argument(
          "strong relation not contained in weak relation (the identity "
          "homomorphism requirement)");
  }
}

bool Template::is_ordered() const {
  Relation impl = implication_relation();
  for (const auto& p : pairs)
    if (p.A == impl && p.B == impl) return true;
  return false;
}

bool validate_ordered(const Template& t) { return t.is_ordered(); }

void Instance::validate(const Template& t) const {
  for (const auto& c : constraints) {
    if (c.pair_index >= t.pairs.size())
      throw std::invalid_argument("constraint references unknown pair");
    if (c.scope.size() != t.pairs[c.pair_index].A.k)
      throw std::invalid_argument("scope length != relation arity");
    for (unsigned v : c.scope)
      if (v >= num_vars) throw std::invalid_argument("variable out of range");
  }
}

bool check_polymorphism(const BoolFn& f, const Template& t) {
  t.validate();
  unsigned n = f.arity();
  for (const auto& pair : t.pairs) {
    auto tuples = pair.A.members();
    if (tuples.empty()) continue;  // no A-tuples: nothing to map
    double combos = 1;
    for (unsigned i = 0; i < n; ++i) combos *= tuples.size();
    if (combos > 1e7)
      throw std::invalid_argument("too large, use sampling");
    unsigned k = pair.A.k;
    // Odometer over column choices; rows[r] collects bit r of each column.
    std::vector<unsigned> choice(n, 0);
    for (;;) {
      std::vector<std::uint64_t> rows(k, 0);
      for (unsigned i = 0; i < n; ++i) {
        unsigned tv = tuples[choice[i]];
        for (unsigned r = 0; r < k; ++r)
          if ((tv >> r) & 1) rows[r] |= std::uint64_t(1) << i;
      }
      unsigned out = 0;
      for (unsigned r = 0; r < k; ++r)
        if (f.get(rows[r])) out |= 1u << r;
      if (!pair.B.contains(out)) return false;
      unsigned i = 0;
      while (i < n && ++choice[i] == tuples.size()) choice[i++] = 0;
      if (i == n) break;
    }
  }
  return true;
}

std::vector<BoolFn> enumerate_polymorphisms(const Template& t, unsigned n,
                                            bool monotone_only) {
  if (n > 4)
    throw std::invalid_argument("enumerate_polymorphisms supports n <= 4");
  t.validate();
  std::vector<BoolFn> out;
  std::uint64_t tables = std::uint64_t(1) << (std::uint64_t(1) << n);
  for (std::uint64_t tbl = 0; tbl < tables; ++tbl) {
    BoolFn f(n);
    for (std::uint64_t x = 0; x < f.size(); ++x) f.set(x, (tbl >> x) & 1);
    if (monotone_only && !f.is_monotone()) continue;
    if (check_polymorphism(f, t)) out.push_back(std::move(f));
  }
  return out;
}

bool brute_force_decide(const Instance& inst, const Template& t, Side side) {
  if (inst.num_vars > 24) throw std::invalid_argument("too many variables");
  inst.validate(t);
  std::uint64_t assignments = std::uint64_t(1) << inst.num_vars;
  for (std::uint64_t a = 0; a < assignments; ++a) {
    bool ok = true;
    for (const auto& c : inst.constraints) {
      unsigned tv = 0;
      for (unsigned pos = 0; pos < c.scope.size(); ++pos)
        if ((a >> c.scope[pos]) & 1) tv |= 1u << pos;
      const Relation& rel = side == Side::strong ? t.pairs[c.pair_index].A
                                                 : t.pairs[c.pair_index].B;
      if (!rel.contains(tv)) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

Template two_sat_template() {
  // the four 2-clause types, strong = weak
  Template t;
  Relation or2 = Relation::from_tuples(2, {0b01, 0b10, 0b11});
  Relation or_negb = Relation::from_tuples(2, {0b00, 0b01, 0b11});
  Relation or_nega = Relation::from_tuples(2, {0b00, 0b10, 0b11});
  Relation nand2 = Relation::from_tuples(2, {0b00, 0b01, 0b10});
  for (Relation r : {or2, or_negb, or_nega, nand2}) t.pairs.push_back({r, r});
  return t;
}

Template ordered_one_in_three_template() {
  Template t;
  t.pairs.push_back({one_in_three_relation(), nae_relation()});
  t.pairs.push_back({implication_relation(), implication_relation()});
  return t;
}

Template ordered_one_in_three_neq_template() {
  Template t = ordered_one_in_three_template();
  t.pairs.push_back({neq_relation(), neq_relation()});
  return t;
}

}  // namespace minionlab
