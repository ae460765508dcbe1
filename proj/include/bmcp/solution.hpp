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

#ifndef BMCP_SOLUTION_HPP_
#define BMCP_SOLUTION_HPP_

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "bmcp/instance.hpp"

namespace bmcp {

// A subset of items together with per-element coverage counts and the cached
// objective W(S) and cost C(S). Flips touch only the elements of the flipped
// item. A Solution is bound to the Instance it was created for; the instance
// is passed explicitly to every mutating call.
class Solution {
 public:
  Solution() = default;
  explicit Solution(const Instance& inst)
      : selected_(inst.num_items(), 0), cov_count_(inst.num_elements(), 0) {}

  static Solution from_items(const Instance& inst, std::span<const ItemIndex> items) {
    Solution sol(inst);
    for (ItemIndex i : items) {
      if (i < 0 || i >= inst.num_items()) {
        throw std::out_of_range("item index out of range");
      }
      if (!sol.contains(i)) sol.flip(inst, i);
    }
    return sol;
  }
  static Solution from_items(const Instance& inst,
                             std::initializer_list<ItemIndex> items) {
    return from_items(inst, std::span<const ItemIndex>(items.begin(), items.size()));
  }

  bool contains(ItemIndex i) const { return selected_[i] != 0; }
  Weight weight() const { return weight_; }
  Cost cost() const { return cost_; }
  std::int32_t size() const { return size_; }
  std::int32_t coverage_count(ElementIndex j) const { return cov_count_[j]; }
  bool feasible(const Instance& inst) const { return cost_ <= inst.budget(); }

  // Selected items in ascending order.
  std::vector<ItemIndex> items() const {
    std::vector<ItemIndex> out;
    out.reserve(size_);
    for (std::size_t i = 0; i < selected_.size(); ++i) {
      if (selected_[i]) out.push_back(static_cast<ItemIndex>(i));
    }
    return out;
  }

  // Toggles membership of item i in place.
  void flip(const Instance& inst, ItemIndex i) {
    if (selected_[i]) {
      selected_[i] = 0;
      --size_;
      cost_ -= inst.cost(i);
      for (ElementIndex j : inst.cover(i)) {
        if (--cov_count_[j] == 0) weight_ -= inst.weight(j);
      }
    } else {
      selected_[i] = 1;
      ++size_;
      cost_ += inst.cost(i);
      for (ElementIndex j : inst.cover(i)) {
        if (cov_count_[j]++ == 0) weight_ += inst.weight(j);
      }
    }
  }

  // W(flip(S, i)) - W(S) without modifying the solution.
  Weight gain(const Instance& inst, ItemIndex i) const {
    Weight delta = 0;
    if (selected_[i]) {
      for (ElementIndex j : inst.cover(i)) {
        if (cov_count_[j] == 1) delta -= inst.weight(j);
      }
    } else {
      for (ElementIndex j : inst.cover(i)) {
        if (cov_count_[j] == 0) delta += inst.weight(j);
      }
    }
    return delta;
  }

  // Removal is always feasible; addition must respect the budget.
  bool flip_feasible(const Instance& inst, ItemIndex i) const {
    return selected_[i] != 0 || cost_ + inst.cost(i) <= inst.budget();
  }

  friend bool operator==(const Solution&, const Solution&) = default;

 private:
  std::vector<std::uint8_t> selected_;
  std::vector<std::int32_t> cov_count_;
  Weight weight_ = 0;
  Cost cost_ = 0;
  std::int32_t size_ = 0;
};

namespace internal {
inline void check_item(const Instance& inst, ItemIndex i) {
  if (i < 0 || i >= inst.num_items()) throw std::out_of_range("item index out of range");
}
}  // namespace internal

inline Solution flip(const Instance& inst, Solution sol, ItemIndex i) {
  internal::check_item(inst, i);
  sol.flip(inst, i);
  return sol;
}

inline Weight gain(const Instance& inst, const Solution& sol, ItemIndex i) {
  internal::check_item(inst, i);
  return sol.gain(inst, i);
}

inline bool flip_feasible(const Instance& inst, const Solution& sol, ItemIndex i) {
  internal::check_item(inst, i);
  return sol.flip_feasible(inst, i);
}

}  // namespace bmcp

#endif  // BMCP_SOLUTION_HPP_
