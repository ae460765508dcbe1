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
#include <vector>

#include "gtest/gtest.h"

#include "bmcp/neighbours.hpp"
#include "test_util.hpp"

namespace bmcp {
namespace {

std::vector<ItemIndex> one_based(std::span<const ItemIndex> items) {
  std::vector<ItemIndex> out;
  for (ItemIndex i : items) out.push_back(i + 1);
  return out;
}

TEST(NeighbourGraph, FigureOne) {
  const NeighbourGraph g = build_neighbour_graph(testing::figure_one_instance());
  EXPECT_EQ(one_based(g.neighbours(0)), (std::vector<ItemIndex>{2, 6}));
  EXPECT_EQ(one_based(g.neighbours(1)), (std::vector<ItemIndex>{1, 3, 6}));
  EXPECT_EQ(one_based(g.neighbours(2)), (std::vector<ItemIndex>{2, 4}));
  EXPECT_EQ(one_based(g.neighbours(3)), (std::vector<ItemIndex>{3}));
  EXPECT_EQ(one_based(g.neighbours(4)), (std::vector<ItemIndex>{6}));
  EXPECT_EQ(one_based(g.neighbours(5)), (std::vector<ItemIndex>{1, 2, 5}));
}

TEST(NeighbourGraph, InstanceX) {
  const NeighbourGraph g = build_neighbour_graph(testing::instance_x());
  EXPECT_EQ(one_based(g.neighbours(0)), (std::vector<ItemIndex>{2}));
  EXPECT_EQ(one_based(g.neighbours(1)), (std::vector<ItemIndex>{1, 3}));
  EXPECT_EQ(one_based(g.neighbours(2)), (std::vector<ItemIndex>{2}));
}

TEST(NeighbourGraph, DisjointCovers) {
  const Instance inst({1, 1, 1}, {1, 1, 1, 1}, {{0}, {1, 2}, {3}}, 2);
  const NeighbourGraph g = build_neighbour_graph(inst);
  for (ItemIndex i = 0; i < 3; ++i) EXPECT_TRUE(g.neighbours(i).empty());
}

TEST(NeighbourGraph, MatchesPairwiseOracleAndIsSymmetric) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 100; ++t) {
    const Instance inst = testing::random_instance(
        rng, {.min_n = 1, .max_n = 50, .min_m = 1, .max_m = 40,
              .min_density = 0.0, .max_density = 0.3});
    const NeighbourGraph g = build_neighbour_graph(inst);
    const auto expected = testing::pairwise_neighbours(inst);
    for (ItemIndex i = 0; i < inst.num_items(); ++i) {
      auto row = g.neighbours(i);
      ASSERT_EQ(std::vector<ItemIndex>(row.begin(), row.end()), expected[i]);
      for (ItemIndex other : row) {
        EXPECT_NE(other, i);
        auto back = g.neighbours(other);
        EXPECT_TRUE(std::binary_search(back.begin(), back.end(), i));
      }
    }
  }
}

TEST(InstanceStats, InstanceX) {
  const InstanceStats s = instance_stats(testing::instance_x());
  EXPECT_DOUBLE_EQ(s.alpha, 5.0 / 9.0);
  EXPECT_DOUBLE_EQ(s.sigma, 1.0 - std::pow(1.0 - 25.0 / 81.0, 3));
  EXPECT_DOUBLE_EQ(s.mean_gamma, 4.0 / 3.0);
  EXPECT_EQ(s.max_gamma, 2u);
}

TEST(InstanceStats, FullAndEmptyIncidence) {
  const Instance full({1, 1}, {1, 1}, {{0, 1}, {0, 1}}, 1);
  const InstanceStats f = instance_stats(full);
  EXPECT_DOUBLE_EQ(f.alpha, 1.0);
  EXPECT_DOUBLE_EQ(f.sigma, 1.0);

  const Instance empty({1, 1}, {1, 1}, {{}, {}}, 1);
  const InstanceStats e = instance_stats(empty);
  EXPECT_DOUBLE_EQ(e.alpha, 0.0);
  EXPECT_DOUBLE_EQ(e.sigma, 0.0);
  EXPECT_EQ(e.max_gamma, 0u);
}

TEST(InstanceStats, EmptyInstanceIsAnError) {
  EXPECT_THROW(instance_stats(Instance({}, {1}, {}, 0)), std::invalid_argument);
  EXPECT_THROW(instance_stats(Instance({1}, {}, {{}}, 0)), std::invalid_argument);
}

}  // namespace
}  // namespace bmcp
