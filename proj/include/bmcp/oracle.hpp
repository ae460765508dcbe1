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

#ifndef BMCP_ORACLE_HPP_
#define BMCP_ORACLE_HPP_

#include <cstdint>
#include <limits>
#include <vector>

#include "bmcp/instance.hpp"
#include "bmcp/solution.hpp"

namespace bmcp {

struct OracleResult {
  Weight best_weight = 0;
  std::vector<ItemIndex> best_items;
  bool exact = true;
  std::int64_t nodes = 0;
};

// Depth-first include/exclude branch and bound over items in index order.
// Bound: current W plus the weight of every uncovered element that some
// undecided item still covers (costs ignored). `node_limit` caps the number
// of visited nodes; hitting it clears `exact`.
class ExactSolver {
 public:
  ExactSolver(const Instance& inst, std::int64_t node_limit)
      : inst_(inst), limit_(node_limit), current_(inst), mark_(inst.num_elements(), 0) {}

  OracleResult solve() {
    result_ = OracleResult{};
    result_.best_weight = 0;
    descend(0);
    return result_;
  }

 private:
  Weight bound(ItemIndex next) {
    ++stamp_;
    Weight extra = 0;
    for (ItemIndex i = next; i < inst_.num_items(); ++i) {
      for (ElementIndex j : inst_.cover(i)) {
        if (current_.coverage_count(j) == 0 && mark_[j] != stamp_) {
          mark_[j] = stamp_;
          extra += inst_.weight(j);
        }
      }
    }
    return current_.weight() + extra;
  }

  void descend(ItemIndex next) {
    if (!result_.exact) return;
    if (++result_.nodes > limit_) {
      result_.exact = false;
      return;
    }
    if (current_.weight() > result_.best_weight) {
      result_.best_weight = current_.weight();
      result_.best_items = current_.items();
    }
    if (next == inst_.num_items() || bound(next) <= result_.best_weight) return;
    if (current_.cost() + inst_.cost(next) <= inst_.budget()) {
      current_.flip(inst_, next);
      descend(next + 1);
      current_.flip(inst_, next);
    }
    descend(next + 1);
  }

  const Instance& inst_;
  std::int64_t limit_;
  Solution current_;
  std::vector<std::uint32_t> mark_;
  std::uint32_t stamp_ = 0;
  OracleResult result_;
};

inline OracleResult exact_opt(
    const Instance& inst,
    std::int64_t node_limit = std::numeric_limits<std::int64_t>::max()) {
  return ExactSolver(inst, node_limit).solve();
}

}  // namespace bmcp

#endif  // BMCP_ORACLE_HPP_
