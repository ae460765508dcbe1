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

#ifndef BMCP_GREEDY_HPP_
#define BMCP_GREEDY_HPP_

#include <optional>

#include "bmcp/instance.hpp"
#include "bmcp/solution.hpp"

namespace bmcp {

namespace internal {

// Ranks (gain, cost) pairs by gain/cost. A zero-cost item with positive gain
// ranks above every finite ratio; 0/0 counts as ratio 0. Equal ratios prefer
// the larger gain.
inline bool better_ratio(Weight gain_a, Cost cost_a, Weight gain_b, Cost cost_b) {
  const bool inf_a = cost_a == 0 && gain_a > 0;
  const bool inf_b = cost_b == 0 && gain_b > 0;
  if (inf_a != inf_b) return inf_a;
  if (!inf_a) {
    // Zero costs reaching here carry zero gain, i.e. ratio 0/1.
    const __int128 num_a = cost_a == 0 ? 0 : gain_a;
    const __int128 den_a = cost_a == 0 ? 1 : cost_a;
    const __int128 num_b = cost_b == 0 ? 0 : gain_b;
    const __int128 den_b = cost_b == 0 ? 1 : cost_b;
    if (num_a * den_b != num_b * den_a) return num_a * den_b > num_b * den_a;
  }
  return gain_a > gain_b;
}

}  // namespace internal

// Candidate (a): repeatedly add the feasible unselected item with the best
// marginal weight per unit cost until nothing fits. Ties go to the larger
// gain, then to the smaller index.
inline Solution greedy_accumulate(const Instance& inst) {
  Solution sol(inst);
  const ItemIndex n = inst.num_items();
  while (true) {
    std::optional<ItemIndex> best;
    Weight best_gain = 0;
    for (ItemIndex i = 0; i < n; ++i) {
      if (sol.contains(i) || sol.cost() + inst.cost(i) > inst.budget()) continue;
      const Weight g = sol.gain(inst, i);
      if (!best || internal::better_ratio(g, inst.cost(i), best_gain, inst.cost(*best))) {
        best = i;
        best_gain = g;
      }
    }
    if (!best) break;
    sol.flip(inst, *best);
  }
  return sol;
}

// Candidate (b): the single item with c_q <= L maximizing W({q}); smallest
// index on ties. Empty when no item fits.
inline std::optional<ItemIndex> best_single_item(const Instance& inst) {
  std::optional<ItemIndex> best;
  Weight best_weight = -1;
  for (ItemIndex i = 0; i < inst.num_items(); ++i) {
    if (inst.cost(i) > inst.budget()) continue;
    Weight w = 0;
    for (ElementIndex j : inst.cover(i)) w += inst.weight(j);
    if (w > best_weight) {
      best = i;
      best_weight = w;
    }
  }
  return best;
}

// Better of the density greedy and the best single item. Always feasible.
inline Solution greedy_construct(const Instance& inst) {
  Solution sol = greedy_accumulate(inst);
  if (auto q = best_single_item(inst)) {
    Solution single(inst);
    single.flip(inst, *q);
    if (sol.weight() < single.weight()) return single;
  }
  return sol;
}

}  // namespace bmcp

#endif  // BMCP_GREEDY_HPP_
