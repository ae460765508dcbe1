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

#include <random>
#include <string>

#include "gtest/gtest.h"

#include "bmcp/instance.hpp"
#include "bmcp/solution.hpp"
#include "test_util.hpp"

namespace bmcp {
namespace {

using testing::instance_x;

std::string parse_error_message(const std::string& text) {
  try {
    parse_instance(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

TEST(ParseInstance, InstanceX) {
  const Instance inst = instance_x();
  EXPECT_EQ(inst.num_items(), 3);
  EXPECT_EQ(inst.num_elements(), 3);
  EXPECT_EQ(inst.budget(), 5);
  EXPECT_EQ(inst.cost(1), 3);
  EXPECT_EQ(inst.weight(2), 9);
  EXPECT_EQ(std::vector<ElementIndex>(inst.cover(0).begin(), inst.cover(0).end()),
            (std::vector<ElementIndex>{0}));
  EXPECT_EQ(std::vector<ElementIndex>(inst.cover(2).begin(), inst.cover(2).end()),
            (std::vector<ElementIndex>{1, 2}));
  EXPECT_EQ(std::vector<ItemIndex>(inst.covered_by(1).begin(), inst.covered_by(1).end()),
            (std::vector<ItemIndex>{1, 2}));
}

TEST(ParseInstance, DegenerateSingleItem) {
  const Instance inst = parse_instance("1 1 0\n0\n0\n0\n");
  EXPECT_EQ(inst.num_items(), 1);
  EXPECT_TRUE(inst.cover(0).empty());
  EXPECT_TRUE(inst.covered_by(0).empty());
}

TEST(ParseInstance, Errors) {
  EXPECT_NE(parse_error_message("3 3 5\n2 3 4\n5 7 9\n1 1\n2 1 2\n2 2 4\n")
                .find("line 6: element index out of range"),
            std::string::npos);
  EXPECT_NE(parse_error_message("3 3 5\n2 3 4\n5 7 9\n1 1\n2 1 1\n2 2 3\n")
                .find("line 5: duplicate edge"),
            std::string::npos);
  EXPECT_NE(parse_error_message("3 3 5\n2 -3 4\n5 7 9\n1 1\n2 1 2\n2 2 3\n")
                .find("line 2: negative costs"),
            std::string::npos);
  EXPECT_NE(parse_error_message("3 3 -5\n").find("line 1: negative budget"),
            std::string::npos);
  EXPECT_NE(parse_error_message("3 3 5\n2 3 4\n5 7 9\n1 1\n").find("truncated"),
            std::string::npos);
  EXPECT_NE(parse_error_message("3 3 5\n2 3 4\n5 -7 9\n").find("negative weights"),
            std::string::npos);
  EXPECT_NE(parse_error_message("3 3 5\n2 3\n").find("line 2: expected 3 costs"),
            std::string::npos);
  EXPECT_NE(parse_error_message("1 2 5\n1\n1 1\n2 2 1\n").find("strictly increasing"),
            std::string::npos);
  EXPECT_NE(parse_error_message("1 1 5\n1\n1\n1 x\n").find("malformed"), std::string::npos);
  EXPECT_NE(parse_error_message("1 1 5\n1\n1\n1 1\n1 1\n").find("trailing"),
            std::string::npos);
}

TEST(ParseInstance, CommentLineNumbersCountPhysicalLines) {
  const std::string msg = parse_error_message("# c\n\n1 1 0\n0\n0\n1 2\n");
  EXPECT_NE(msg.find("line 6:"), std::string::npos) << msg;
}

TEST(ParseInstance, JsonMirrorMatchesText) {
  const Instance inst = instance_x();
  const std::string json = instance_to_json(inst).dump();
  EXPECT_EQ(parse_instance_json(json), inst);
  EXPECT_THROW(parse_instance_json(R"({"n":1,"m":1,"budget":1,"costs":[1],"weights":[1],"cover":[[2]]})"),
               ParseError);
}

TEST(ParseInstance, RandomRoundTrip) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 50; ++t) {
    const Instance inst = testing::random_instance(rng);
    EXPECT_EQ(parse_instance(serialize_instance(inst)), inst);
  }
}

TEST(Evaluate, InstanceXSubsets) {
  const Instance inst = instance_x();
  EXPECT_EQ(evaluate(inst, {}), (Evaluation{0, 0}));
  EXPECT_EQ(evaluate(inst, {1}), (Evaluation{12, 3}));
  EXPECT_EQ(evaluate(inst, {0, 2}), (Evaluation{21, 6}));
  EXPECT_THROW(evaluate(inst, {3}), std::out_of_range);
}

TEST(Flip, InstanceX) {
  const Instance inst = instance_x();
  Solution s = flip(inst, Solution::from_items(inst, {1}), 2);
  EXPECT_EQ(s.items(), (std::vector<ItemIndex>{1, 2}));
  EXPECT_EQ(s.weight(), 21);
  EXPECT_EQ(s.cost(), 7);

  Solution t = flip(inst, Solution(inst), 0);
  EXPECT_EQ(t.items(), (std::vector<ItemIndex>{0}));
  EXPECT_EQ(t.weight(), 5);
  EXPECT_EQ(t.cost(), 2);
}

TEST(Gain, InstanceX) {
  const Instance inst = instance_x();
  EXPECT_EQ(gain(inst, Solution::from_items(inst, {1}), 2), 9);
  EXPECT_EQ(gain(inst, Solution::from_items(inst, {1, 2}), 1), -5);
  const Solution empty(inst);
  for (ItemIndex i = 0; i < 3; ++i) {
    EXPECT_EQ(gain(inst, empty, i), evaluate(inst, {i}).weight);
  }
}

TEST(FlipFeasible, InstanceX) {
  const Instance inst = instance_x();
  const Solution s = Solution::from_items(inst, {1});
  EXPECT_FALSE(flip_feasible(inst, s, 2));
  EXPECT_TRUE(flip_feasible(inst, s, 1));
  EXPECT_TRUE(flip_feasible(inst, Solution(inst), 2));
  EXPECT_THROW(flip_feasible(inst, s, -1), std::out_of_range);
}

// Random flip walks checked against from-scratch evaluation.
TEST(SolutionProperties, RandomFlipSequences) {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 40; ++t) {
    const Instance inst = testing::random_instance(rng, {.max_n = 30, .max_m = 30});
    std::uniform_int_distribution<ItemIndex> pick(0, inst.num_items() - 1);
    Solution sol(inst);
    for (int step = 0; step < 1000; ++step) {
      const ItemIndex i = pick(rng);
      const Weight before = sol.weight();
      const Weight g = sol.gain(inst, i);
      const bool adding = !sol.contains(i);
      const Solution copy = sol;

      sol.flip(inst, i);
      EXPECT_EQ(sol.weight() - before, g);
      EXPECT_EQ(sol.gain(inst, i), -g);
      if (adding) {
        EXPECT_GE(sol.weight(), before);
      } else {
        EXPECT_LE(sol.weight(), before);
      }
      EXPECT_EQ(flip(inst, sol, i), copy);
    }
    const auto items = sol.items();
    EXPECT_EQ(evaluate(inst, items), (Evaluation{sol.weight(), sol.cost()}));
    for (ElementIndex j = 0; j < inst.num_elements(); ++j) {
      int count = 0;
      for (ItemIndex i : items) {
        for (ElementIndex e : inst.cover(i)) count += e == j;
      }
      EXPECT_EQ(sol.coverage_count(j), count);
    }
  }
}

}  // namespace
}  // namespace bmcp
