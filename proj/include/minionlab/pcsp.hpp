#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "minionlab/boolfn.hpp"

namespace minionlab {

/// Boolean relation of arity k <= 6, stored as a bitmask over {0,1}^k.
/// Tuple (t_1,...,t_k) is encoded with t_1 in the least-significant bit.
struct Relation {
  unsigned k = 0;
  std::uint64_t tuples = 0;

  static constexpr unsigned kMaxArity = 6;

  bool contains(unsigned t) const { return (tuples >> t) & 1u; }
  unsigned count() const;
  std::vector<unsigned> members() const;

  static Relation from_tuples(unsigned k, std::initializer_list<unsigned> ts);
  bool operator==(const Relation& o) const = default;
};

/// Frequently used relations.
Relation implication_relation();   // {(0,0),(0,1),(1,1)}
Relation one_in_three_relation();  // exactly one 1 among 3
Relation nae_relation();           // not-all-equal among 3
Relation neq_relation();           // {(0,1),(1,0)}

struct RelationPair {
  Relation A, B;
};

/// Pairs of strong/weak relations over the shared Boolean domain. Every
/// template must satisfy A subset of B pairwise (identity homomorphism);
/// validate() rejects anything else.
struct Template {
  std::vector<RelationPair> pairs;

  void validate() const;
  bool is_ordered() const;
};

/// True iff some pair is the implication relation on both sides.
bool validate_ordered(const Template& t);

struct Constraint {
  unsigned pair_index = 0;
  std::vector<unsigned> scope;  // variable ids, repeats allowed
};

struct Instance {
  unsigned num_vars = 0;
  std::vector<Constraint> constraints;

  void validate(const Template& t) const;
};

/// Columnwise closure check: every way of filling n columns with A-tuples
/// must map under f to a B-tuple, for every pair. Guarded at |A|^n <= 1e7.
bool check_polymorphism(const BoolFn& f, const Template& t);

/// All arity-n polymorphisms (optionally restricted to monotone ones).
/// Guarded at n <= 4.
std::vector<BoolFn> enumerate_polymorphisms(const Template& t, unsigned n,
                                            bool monotone_only);

enum class Side { strong, weak };

/// Exhaustive satisfiability under the A-relations (strong) or B-relations
/// (weak). Guarded at 24 variables.
bool brute_force_decide(const Instance& inst, const Template& t, Side side);

/// Standard templates for tests and the CLI.
Template two_sat_template();
Template ordered_one_in_three_template();        // (1in3, NAE) + implication
Template ordered_one_in_three_neq_template();    // above + disequality

}  // namespace minionlab
