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

#ifndef BMCP_NEIGHBOURS_HPP_
#define BMCP_NEIGHBOURS_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "bmcp/instance.hpp"

namespace bmcp {

// Item adjacency: i' is a neighbour of i iff they cover a common element.
class NeighbourGraph {
 public:
  NeighbourGraph() = default;
  explicit NeighbourGraph(std::vector<std::vector<ItemIndex>> adjacency)
      : adjacency_(std::move(adjacency)) {}

  ItemIndex num_items() const { return static_cast<ItemIndex>(adjacency_.size()); }
  std::span<const ItemIndex> neighbours(ItemIndex i) const { return adjacency_[i]; }

  friend bool operator==(const NeighbourGraph&, const NeighbourGraph&) = default;

 private:
  std::vector<std::vector<ItemIndex>> adjacency_;
};

// Pairs up the items of every covered_by list, using a per-item stamp to
// drop repeats, so the cost is sum over items of sum_{j in cover(i)} |covered_by(j)|.
inline NeighbourGraph build_neighbour_graph(const Instance& inst) {
  const ItemIndex n = inst.num_items();
  std::vector<std::vector<ItemIndex>> adjacency(n);
  std::vector<ItemIndex> stamp(n, -1);
  for (ItemIndex i = 0; i < n; ++i) {
    stamp[i] = i;
    auto& row = adjacency[i];
    for (ElementIndex j : inst.cover(i)) {
      for (ItemIndex other : inst.covered_by(j)) {
        if (stamp[other] != i) {
          stamp[other] = i;
          row.push_back(other);
        }
      }
    }
    std::sort(row.begin(), row.end());
  }
  return NeighbourGraph(std::move(adjacency));
}

struct InstanceStats {
  double alpha = 0.0;
  double sigma = 0.0;
  double mean_gamma = 0.0;
  std::size_t max_gamma = 0;
};

inline InstanceStats instance_stats(const Instance& inst, const NeighbourGraph& gamma) {
  const double n = inst.num_items();
  const double m = inst.num_elements();
  if (n * m == 0) throw std::invalid_argument("empty instance");
  InstanceStats stats;
  stats.alpha = static_cast<double>(inst.num_edges()) / (n * m);
  stats.sigma = 1.0 - std::pow(1.0 - stats.alpha * stats.alpha, m);
  std::size_t total = 0;
  for (ItemIndex i = 0; i < gamma.num_items(); ++i) {
    total += gamma.neighbours(i).size();
    stats.max_gamma = std::max(stats.max_gamma, gamma.neighbours(i).size());
  }
  stats.mean_gamma = static_cast<double>(total) / n;
  return stats;
}

inline InstanceStats instance_stats(const Instance& inst) {
  if (inst.num_items() == 0 || inst.num_elements() == 0) {
    throw std::invalid_argument("empty instance");
  }
  return instance_stats(inst, build_neighbour_graph(inst));
}

}  // namespace bmcp

#endif  // BMCP_NEIGHBOURS_HPP_
