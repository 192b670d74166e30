#pragma once

#include <cstdint>
#include <vector>

#include "minionlab/minors.hpp"
#include "minionlab/pcsp.hpp"
#include "minionlab/shapley.hpp"

namespace minionlab {

/// Bipartite label cover with 2-to-1 projections: left labels [2*sigma],
/// right labels [sigma].
struct LabelCover {
  unsigned sigma = 0;
  unsigned num_left = 0;
  unsigned num_right = 0;
  struct Edge {
    unsigned u, v;   // left / right vertex ids
    VarMap proj;     // two-to-one map [2 sigma] -> [sigma]
  };
  std::vector<Edge> edges;

  void validate() const;
  /// Every left vertex sees each 2-to-1 map equally often.
  bool is_rich() const;
};

/// One left vertex per copy, one right vertex per 2-to-1 map, and an edge
/// (u, v_pi) with projection pi for every pair; rich by construction.
/// sigma <= 3 keeps |F_{2->1}| desk-scale.
LabelCover make_rich_instance(unsigned sigma, unsigned copies);

/// Long-code reduction output: a PCSP instance over equality-merged nodes
/// plus the bookkeeping needed to read block functions back off an
/// assignment.
struct ReducedInstance {
  struct Block {
    bool left;
    unsigned vertex;        // id within its side
    unsigned width;         // 2*sigma or sigma
    std::uint64_t node_base;
  };
  Instance instance;               // over merged variables
  std::vector<Block> blocks;       // left blocks first, then right
  std::vector<unsigned> node_to_var;
  std::uint64_t num_nodes = 0;

  const Block& block_of(bool left, unsigned vertex) const;
  /// The block function induced by an assignment to the merged variables.
  BoolFn block_function(bool left, unsigned vertex,
                        const std::vector<unsigned>& values) const;
};

/// Emits the polymorphism constraints per vertex block and realizes the
/// equality constraints by variable identification (union-find).
ReducedInstance reduce(const LabelCover& lc, const Template& t);

/// Values per merged variable induced by assigning each node (w, x) the bit
/// x_{label(w)}. Throws if the labeling conflicts on merged nodes.
std::vector<unsigned> dictator_assignment(const ReducedInstance& ri,
                                          const LabelCover& lc,
                                          const std::vector<unsigned>& left_labels,
                                          const std::vector<unsigned>& right_labels);

/// Every constraint satisfied under the chosen side's relations.
bool assignment_satisfies(const ReducedInstance& ri, const Template& t,
                          const std::vector<unsigned>& values, Side side);

struct SoundnessResult {
  Rat mean_fraction;        // satisfied label-cover constraints, averaged
  unsigned trials = 0;
  bool degenerate = false;  // some block decoded to the empty set
  std::vector<std::size_t> left_decode_sizes, right_decode_sizes;
};

/// Decodes every block with the Shapley threshold rule and samples random
/// labelings from the decode sets. The assignment must weakly satisfy the
/// reduced instance; block functions are checked to be polymorphisms.
SoundnessResult soundness_experiment(const LabelCover& lc, const Template& t,
                                     const ReducedInstance& ri,
                                     const std::vector<unsigned>& values,
                                     const Rat& lambda, std::uint64_t seed,
                                     unsigned trials);

}  // namespace minionlab
