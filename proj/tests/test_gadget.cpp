#include "doctest.h"

#include "minionlab/blp_aip.hpp"
#include "minionlab/gadget.hpp"

using namespace minionlab;

namespace {

// perfect labeling: every left vertex takes label 0, right vertices follow
// their projection
std::pair<std::vector<unsigned>, std::vector<unsigned>> perfect_labeling(
    const LabelCover& lc) {
  std::vector<unsigned> left(lc.num_left, 0);
  std::vector<unsigned> right(lc.num_right, 0);
  for (const auto& e : lc.edges) right[e.v] = e.proj.image[left[e.u]];
  return {left, right};
}

}  // namespace

TEST_CASE("rich instance generation") {
  LabelCover one = make_rich_instance(1, 1);
  CHECK(one.num_right == 1);
  CHECK(one.edges.size() == 1);
  one.validate();
  CHECK(one.is_rich());

  LabelCover two = make_rich_instance(2, 3);
  CHECK(two.num_left == 3);
  CHECK(two.num_right == 6);  // |F_{2->1}(2)| from the enumerator
  CHECK(two.edges.size() == 18);
  two.validate();
  CHECK(two.is_rich());

  // breaking richness is detected
  LabelCover broken = two;
  broken.edges.pop_back();
  CHECK_FALSE(broken.is_rich());

  CHECK_THROWS_AS(make_rich_instance(4, 1), std::invalid_argument);
}

TEST_CASE("reduction merges equality constraints consistently") {
  Template ordered = ordered_one_in_three_template();
  for (unsigned sigma : {1u, 2u}) {
    LabelCover lc = make_rich_instance(sigma, 2);
    ReducedInstance ri = reduce(lc, ordered);
    // merged nodes share variables exactly along the projections
    for (const auto& e : lc.edges) {
      const auto& bu = ri.block_of(true, e.u);
      const auto& bv = ri.block_of(false, e.v);
      for (std::uint64_t y = 0; y < (std::uint64_t(1) << sigma); ++y) {
        std::uint64_t x = 0;
        for (unsigned j = 0; j < 2 * sigma; ++j)
          if ((y >> e.proj.image[j]) & 1) x |= std::uint64_t(1) << j;
        CHECK(ri.node_to_var[bu.node_base + x] ==
              ri.node_to_var[bv.node_base + y]);
      }
    }
  }
}

TEST_CASE("dictator assignments satisfy the reduced instance strongly") {
  Template ordered = ordered_one_in_three_template();
  for (unsigned sigma : {1u, 2u}) {
    LabelCover lc = make_rich_instance(sigma, 2);
    ReducedInstance ri = reduce(lc, ordered);
    auto [left, right] = perfect_labeling(lc);
    auto values = dictator_assignment(ri, lc, left, right);
    CHECK(assignment_satisfies(ri, ordered, values, Side::strong));
    CHECK(assignment_satisfies(ri, ordered, values, Side::weak));
    // block functions are the dictators of the labels
    for (unsigned u = 0; u < lc.num_left; ++u)
      CHECK(ri.block_function(true, u, values) ==
            BoolFn::dictator(2 * sigma, left[u]));
  }
}

TEST_CASE("single-edge instance is strong-satisfiable after merging") {
  Template ordered = ordered_one_in_three_template();
  LabelCover lc = make_rich_instance(1, 1);
  ReducedInstance ri = reduce(lc, ordered);
  CHECK(brute_force_decide(ri.instance, ordered, Side::strong));
}

TEST_CASE("soundness experiment recovers a perfect labeling from dictators") {
  Template ordered = ordered_one_in_three_template();
  LabelCover lc = make_rich_instance(2, 2);
  ReducedInstance ri = reduce(lc, ordered);
  auto [left, right] = perfect_labeling(lc);
  auto values = dictator_assignment(ri, lc, left, right);
  SoundnessResult res =
      soundness_experiment(lc, ordered, ri, values, Rat(1, 2), 7, 20);
  CHECK(res.mean_fraction == Rat(1));
  CHECK_FALSE(res.degenerate);
  for (auto s : res.left_decode_sizes) CHECK(s == 1);
}

TEST_CASE("threshold assignment satisfies weakly and decodes broadly") {
  Template ordered = ordered_one_in_three_template();
  LabelCover lc = make_rich_instance(2, 1);
  ReducedInstance ri = reduce(lc, ordered);
  // assign every node by a threshold of its block: THR_{4,2} left,
  // THR_{2,1} right; consistent across merges because projections double
  // the weight
  std::vector<unsigned> values(ri.instance.num_vars, 0);
  for (const auto& b : ri.blocks) {
    BoolFn thr = BoolFn::threshold(b.width, (b.width + 1) / 2);
    for (std::uint64_t x = 0; x < (std::uint64_t(1) << b.width); ++x)
      values[ri.node_to_var[b.node_base + x]] = thr.get(x);
  }
  CHECK(assignment_satisfies(ri, ordered, values, Side::weak));
  CHECK_FALSE(assignment_satisfies(ri, ordered, values, Side::strong));

  SoundnessResult res =
      soundness_experiment(lc, ordered, ri, values, Rat(1, 4), 11, 50);
  CHECK(res.mean_fraction > Rat(0));
  // |S| <= 1/lambda
  for (auto s : res.left_decode_sizes) CHECK(s <= 4);
  for (auto s : res.right_decode_sizes) CHECK(s <= 4);

  // an assignment that breaks the instance is rejected up front
  std::vector<unsigned> bad(ri.instance.num_vars, 1);
  CHECK_THROWS_AS(
      soundness_experiment(lc, ordered, ri, bad, Rat(1, 4), 1, 5),
      std::invalid_argument);
}
