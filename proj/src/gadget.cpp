#include "minionlab/gadget.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "minionlab/rng.hpp"

namespace minionlab {

void LabelCover::validate() const {
  if (sigma == 0) throw std::invalid_argument("sigma must be positive");
  for (const auto& e : edges) {
    if (e.u >= num_left || e.v >= num_right)
      throw std::invalid_argument("edge endpoint out of range");
    if (e.proj.from_arity != 2 * sigma || e.proj.to_arity != sigma ||
        !e.proj.is_two_to_one())
      throw std::invalid_argument("projection is not a 2-to-1 map");
  }
}

bool LabelCover::is_rich() const {
  auto all = enumerate_two_to_one(sigma);
  for (unsigned u = 0; u < num_left; ++u) {
    std::map<std::vector<unsigned>, unsigned> seen;
    for (const auto& e : edges)
      if (e.u == u) ++seen[e.proj.image];
    if (seen.size() != all.size()) return false;
    unsigned c = seen.begin()->second;
    for (auto& [img, cnt] : seen)
      if (cnt != c) return false;
  }
  return true;
}

LabelCover make_rich_instance(unsigned sigma, unsigned copies) {
  if (sigma == 0 || sigma > 3)
    throw std::invalid_argument("make_rich_instance supports sigma in [1, 3]");
  if (copies == 0) throw std::invalid_argument("copies must be positive");
  auto maps = enumerate_two_to_one(sigma);
  LabelCover lc;
  lc.sigma = sigma;
  lc.num_left = copies;
  lc.num_right = static_cast<unsigned>(maps.size());
  for (unsigned u = 0; u < copies; ++u)
    for (unsigned j = 0; j < maps.size(); ++j)
      lc.edges.push_back({u, j, maps[j]});
  return lc;
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::uint64_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::uint64_t(0));
  }
  std::uint64_t find(std::uint64_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::uint64_t a, std::uint64_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::uint64_t> parent_;
};

}  // namespace

const ReducedInstance::Block& ReducedInstance::block_of(bool left,
                                                        unsigned vertex) const {
  for (const auto& b : blocks)
    if (b.left == left && b.vertex == vertex) return b;
  throw std::invalid_argument("no such block");
}

BoolFn ReducedInstance::block_function(bool left, unsigned vertex,
                                       const std::vector<unsigned>& values) const {
  const Block& b = block_of(left, vertex);
  BoolFn f(b.width);
  for (std::uint64_t x = 0; x < f.size(); ++x)
    f.set(x, values[node_to_var[b.node_base + x]] != 0);
  return f;
}

ReducedInstance reduce(const LabelCover& lc, const Template& t) {
  lc.validate();
  t.validate();
  ReducedInstance ri;
  std::uint64_t base = 0;
  for (unsigned u = 0; u < lc.num_left; ++u) {
    ri.blocks.push_back({true, u, 2 * lc.sigma, base});
    base += std::uint64_t(1) << (2 * lc.sigma);
  }
  for (unsigned v = 0; v < lc.num_right; ++v) {
    ri.blocks.push_back({false, v, lc.sigma, base});
    base += std::uint64_t(1) << lc.sigma;
  }
  ri.num_nodes = base;
  if (ri.num_nodes > (std::uint64_t(1) << 22))
    throw std::invalid_argument("reduction too large");

  // equality constraints: for every edge and right point y, identify
  // (u, y o proj) with (v, y)
  UnionFind uf(ri.num_nodes);
  for (const auto& e : lc.edges) {
    const ReducedInstance::Block& bu = ri.block_of(true, e.u);
    const ReducedInstance::Block& bv = ri.block_of(false, e.v);
    for (std::uint64_t y = 0; y < (std::uint64_t(1) << lc.sigma); ++y) {
      std::uint64_t x = 0;
      for (unsigned j = 0; j < 2 * lc.sigma; ++j)
        if ((y >> e.proj.image[j]) & 1) x |= std::uint64_t(1) << j;
      uf.unite(bu.node_base + x, bv.node_base + y);
    }
  }
  // compress roots into variable ids
  ri.node_to_var.assign(ri.num_nodes, 0);
  std::map<std::uint64_t, unsigned> root_id;
  for (std::uint64_t n = 0; n < ri.num_nodes; ++n) {
    std::uint64_t r = uf.find(n);
    auto [it, fresh] = root_id.try_emplace(r, static_cast<unsigned>(root_id.size()));
    ri.node_to_var[n] = it->second;
  }
  ri.instance.num_vars = static_cast<unsigned>(root_id.size());

  // polymorphism constraints per block, columnwise over the strong tuples
  for (unsigned pi = 0; pi < t.pairs.size(); ++pi) {
    const Relation& A = t.pairs[pi].A;
    auto tuples = A.members();
    if (tuples.empty()) continue;
    unsigned k = A.k;
    for (const auto& b : ri.blocks) {
      double combos = 1;
      for (unsigned i = 0; i < b.width; ++i) combos *= tuples.size();
      if (combos * ri.blocks.size() > 5e6)
        throw std::invalid_argument("reduction too large");
      std::vector<unsigned> choice(b.width, 0);
      for (;;) {
        std::vector<std::uint64_t> rows(k, 0);
        for (unsigned i = 0; i < b.width; ++i) {
          unsigned tv = tuples[choice[i]];
          for (unsigned r = 0; r < k; ++r)
            if ((tv >> r) & 1) rows[r] |= std::uint64_t(1) << i;
        }
        Constraint con;
        con.pair_index = pi;
        for (unsigned r = 0; r < k; ++r)
          con.scope.push_back(ri.node_to_var[b.node_base + rows[r]]);
        ri.instance.constraints.push_back(std::move(con));
        unsigned i = 0;
        while (i < b.width && ++choice[i] == tuples.size()) choice[i++] = 0;
        if (i == b.width) break;
      }
    }
  }
  return ri;
}

std::vector<unsigned> dictator_assignment(
    const ReducedInstance& ri, const LabelCover& lc,
    const std::vector<unsigned>& left_labels,
    const std::vector<unsigned>& right_labels) {
  if (left_labels.size() != lc.num_left ||
      right_labels.size() != lc.num_right)
    throw std::invalid_argument("labeling size mismatch");
  std::vector<int> values(ri.instance.num_vars, -1);
  for (const auto& b : ri.blocks) {
    unsigned label = b.left ? left_labels[b.vertex] : right_labels[b.vertex];
    if (label >= b.width) throw std::invalid_argument("label out of range");
    for (std::uint64_t x = 0; x < (std::uint64_t(1) << b.width); ++x) {
      int bit = static_cast<int>((x >> label) & 1);
      int& slot = values[ri.node_to_var[b.node_base + x]];
      if (slot == -1)
        slot = bit;
      else if (slot != bit)
        throw std::invalid_argument(
            "labeling conflicts on an equality-merged node");
    }
  }
  std::vector<unsigned> out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i)
    out[i] = values[i] == 1 ? 1 : 0;
  return out;
}

bool assignment_satisfies(const ReducedInstance& ri, const Template& t,
                          const std::vector<unsigned>& values, Side side) {
  for (const auto& c : ri.instance.constraints) {
    unsigned tv = 0;
    for (unsigned p = 0; p < c.scope.size(); ++p)
      if (values[c.scope[p]]) tv |= 1u << p;
    const Relation& rel =
        side == Side::strong ? t.pairs[c.pair_index].A : t.pairs[c.pair_index].B;
    if (!rel.contains(tv)) return false;
  }
  return true;
}

SoundnessResult soundness_experiment(const LabelCover& lc, const Template& t,
                                     const ReducedInstance& ri,
                                     const std::vector<unsigned>& values,
                                     const Rat& lambda, std::uint64_t seed,
                                     unsigned trials) {
  if (trials == 0) throw std::invalid_argument("trials must be positive");
  if (!assignment_satisfies(ri, t, values, Side::weak))
    throw std::invalid_argument("assignment does not satisfy the instance");

  SoundnessResult res;
  res.trials = trials;
  std::vector<std::vector<unsigned>> left_sets(lc.num_left);
  std::vector<std::vector<unsigned>> right_sets(lc.num_right);
  for (unsigned u = 0; u < lc.num_left; ++u) {
    BoolFn f = ri.block_function(true, u, values);
    if (!check_polymorphism(f, t))
      throw std::logic_error("block function is not a polymorphism");
    DecodeSet d = decode(f, lambda);
    left_sets[u] = d.coords;
    res.left_decode_sizes.push_back(d.coords.size());
    if (d.coords.empty()) res.degenerate = true;
  }
  for (unsigned v = 0; v < lc.num_right; ++v) {
    BoolFn f = ri.block_function(false, v, values);
    if (!check_polymorphism(f, t))
      throw std::logic_error("block function is not a polymorphism");
    DecodeSet d = decode(f, lambda);
    right_sets[v] = d.coords;
    res.right_decode_sizes.push_back(d.coords.size());
    if (d.coords.empty()) res.degenerate = true;
  }

  Rat total(0);
  for (unsigned trial = 0; trial < trials; ++trial) {
    Rng rng = Rng::derive(seed, trial);
    std::vector<int> lu(lc.num_left, -1), rv(lc.num_right, -1);
    for (unsigned u = 0; u < lc.num_left; ++u)
      if (!left_sets[u].empty())
        lu[u] = static_cast<int>(left_sets[u][rng.below(left_sets[u].size())]);
    for (unsigned v = 0; v < lc.num_right; ++v)
      if (!right_sets[v].empty())
        rv[v] = static_cast<int>(
            right_sets[v][rng.below(right_sets[v].size())]);
    unsigned sat = 0;
    for (const auto& e : lc.edges)
      if (lu[e.u] >= 0 && rv[e.v] >= 0 &&
          static_cast<int>(e.proj.image[lu[e.u]]) == rv[e.v])
        ++sat;
    Rat frac(sat, static_cast<unsigned long>(lc.edges.size()));
    frac.canonicalize();
    total += frac;
  }
  res.mean_fraction = total / trials;
  return res;
}

}  // namespace minionlab
