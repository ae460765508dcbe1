// Copyright 2026 The BMCP Solver Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <random>

#include "gtest/gtest.h"

#include "bmcp/greedy.hpp"
#include "bmcp/oracle.hpp"
#include "test_util.hpp"

namespace bmcp {
namespace {

TEST(Greedy, PrefersBestSingleItemOnTwoItemExample) {
  const Instance inst = testing::two_item_instance();
  EXPECT_EQ(greedy_accumulate(inst).items(), (std::vector<ItemIndex>{0}));
  EXPECT_EQ(greedy_accumulate(inst).weight(), 1);
  EXPECT_EQ(best_single_item(inst), 1);
  const Solution s = greedy_construct(inst);
  EXPECT_EQ(s.items(), (std::vector<ItemIndex>{1}));
  EXPECT_EQ(s.weight(), 9);
}

TEST(Greedy, InstanceX) {
  const Instance inst = testing::instance_x();
  // Items 2 and 3 tie at ratio 4; the larger gain (item 3) wins, after
  // which nothing else fits.
  EXPECT_EQ(greedy_accumulate(inst).items(), (std::vector<ItemIndex>{2}));
  EXPECT_EQ(best_single_item(inst), 2);
  const Solution s = greedy_construct(inst);
  EXPECT_EQ(s.items(), (std::vector<ItemIndex>{2}));
  EXPECT_EQ(s.weight(), 16);
}

TEST(Greedy, EqualRatioAndGainPrefersSmallerIndex) {
  const Instance inst({2, 2}, {3, 3}, {{0}, {1}}, 2);
  EXPECT_EQ(greedy_accumulate(inst).items(), (std::vector<ItemIndex>{0}));
}

TEST(Greedy, NothingFits) {
  const Instance inst({6, 7}, {3, 3}, {{0}, {1}}, 5);
  const Solution s = greedy_construct(inst);
  EXPECT_EQ(s.size(), 0);
  EXPECT_EQ(s.weight(), 0);
  EXPECT_FALSE(best_single_item(inst).has_value());
}

TEST(Greedy, ZeroCostItemsWithGainAreAlwaysAdded) {
  // Item 1 is free; item 2 has the better finite ratio but cannot coexist
  // with item 3.
  const Instance inst({0, 1, 5}, {1, 100, 7}, {{0}, {1}, {2}}, 5);
  const Solution s = greedy_accumulate(inst);
  EXPECT_EQ(s.items(), (std::vector<ItemIndex>{0, 1}));
}

TEST(Greedy, ZeroGainItemsFillTheBudget) {
  // Item 2 duplicates item 1's coverage; it is added with gain 0.
  const Instance inst({1, 1}, {4}, {{0}, {0}}, 2);
  EXPECT_EQ(greedy_accumulate(inst).items(), (std::vector<ItemIndex>{0, 1}));
}

TEST(Greedy, FeasibleDominantAndWithinApproximationFloor) {
  std::mt19937_64 rng(99);
  const double floor = (1.0 - std::exp(-1.0)) / 2.0;
  for (int t = 0; t < 300; ++t) {
    const Instance inst = testing::random_instance(rng);
    const Solution s = greedy_construct(inst);
    ASSERT_LE(s.cost(), inst.budget());
    for (ItemIndex q = 0; q < inst.num_items(); ++q) {
      if (inst.cost(q) <= inst.budget()) {
        EXPECT_GE(s.weight(), evaluate(inst, {q}).weight);
      }
    }
    const Weight opt = testing::enumerate_optimum(inst).best_weight;
    EXPECT_GE(static_cast<double>(s.weight()), floor * static_cast<double>(opt));
  }
}

}  // namespace
}  // namespace bmcp
