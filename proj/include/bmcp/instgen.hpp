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

#ifndef BMCP_INSTGEN_HPP_
#define BMCP_INSTGEN_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bmcp/instance.hpp"

namespace bmcp {

enum class Family { kUniform, kGrouped };

struct IntRange {
  std::int64_t lo = 1;
  std::int64_t hi = 100;
};

struct GenParams {
  ItemIndex n = 0;
  ElementIndex m = 0;
  Cost budget = 0;
  Family family = Family::kUniform;
  // alpha for the uniform family, rho for the grouped family.
  double density = 0.05;
  int groups = 25;
  int repeats = 3;
  IntRange cost_range;
  IntRange weight_range;
  std::uint64_t seed = 0;

  void validate() const {
    if (n <= 0 || m <= 0) throw std::invalid_argument("zero dimensions");
    if (budget < 0) throw std::invalid_argument("negative budget");
    if (!(density > 0.0 && density <= 1.0)) {
      throw std::invalid_argument("density must lie in (0, 1]");
    }
    for (const IntRange& r : {cost_range, weight_range}) {
      if (r.lo < 0 || r.hi < r.lo) throw std::invalid_argument("bad value range");
    }
    if (family == Family::kGrouped) {
      if (groups < 1 || groups > std::min<std::int64_t>(n, m)) {
        throw std::invalid_argument("groups must lie in [1, min(n, m)]");
      }
      if (repeats < 1) throw std::invalid_argument("repeats must be >= 1");
    }
  }
};

// "bmcp_<n>_<m>_<density>_<L>", e.g. bmcp_1100_1000_0.3_3000.
inline std::string instance_name(const GenParams& p) {
  std::ostringstream out;
  out << "bmcp_" << p.n << '_' << p.m << '_' << p.density << '_' << p.budget;
  return out.str();
}

// Group label per item and per element for one repeat.
struct Partition {
  std::vector<int> item_group;
  std::vector<int> element_group;
};

struct GroupedInstance {
  Instance instance;
  std::vector<Partition> partitions;
};

namespace internal {

// Contiguous split of `order` into g groups, the first size % g groups one
// larger.
inline std::vector<std::vector<std::int32_t>> split_groups(
    const std::vector<std::int32_t>& order, int g) {
  std::vector<std::vector<std::int32_t>> out(g);
  const std::size_t base = order.size() / g;
  const std::size_t extra = order.size() % g;
  std::size_t pos = 0;
  for (int l = 0; l < g; ++l) {
    const std::size_t len = base + (static_cast<std::size_t>(l) < extra ? 1 : 0);
    out[l].assign(order.begin() + pos, order.begin() + pos + len);
    pos += len;
  }
  return out;
}

// Draws floor(density * |items| * |elements|) (item, element) pairs with
// replacement from the block and marks them in `cover`.
inline void draw_block(std::mt19937_64& rng, double density, const std::vector<std::int32_t>& items,
                       const std::vector<std::int32_t>& elements,
                       std::vector<std::vector<char>>& marked) {
  if (items.empty() || elements.empty()) return;
  const auto draws = static_cast<std::int64_t>(
      std::floor(density * static_cast<double>(items.size()) *
                 static_cast<double>(elements.size())));
  std::uniform_int_distribution<std::size_t> pick_item(0, items.size() - 1);
  std::uniform_int_distribution<std::size_t> pick_element(0, elements.size() - 1);
  for (std::int64_t t = 0; t < draws; ++t) {
    const auto j = elements[pick_element(rng)];
    const auto i = items[pick_item(rng)];
    marked[i][j] = 1;
  }
}

}  // namespace internal

// Uniform family when p.family == kUniform (equivalent to one repeat with a
// single group), otherwise t repeats of a fresh random g-way partition of
// items and elements with edges drawn only inside matching group pairs.
inline GroupedInstance gen_grouped_with_partitions(const GenParams& p) {
  p.validate();
  std::mt19937_64 rng(p.seed);
  std::uniform_int_distribution<std::int64_t> cost_dist(p.cost_range.lo, p.cost_range.hi);
  std::uniform_int_distribution<std::int64_t> weight_dist(p.weight_range.lo,
                                                          p.weight_range.hi);
  std::vector<Cost> costs(p.n);
  for (auto& c : costs) c = cost_dist(rng);
  std::vector<Weight> weights(p.m);
  for (auto& w : weights) w = weight_dist(rng);

  const bool uniform = p.family == Family::kUniform;
  const int groups = uniform ? 1 : p.groups;
  const int repeats = uniform ? 1 : p.repeats;

  std::vector<std::vector<char>> marked(p.n, std::vector<char>(p.m, 0));
  std::vector<std::int32_t> items(p.n), elements(p.m);
  std::vector<Partition> partitions;
  for (int r = 0; r < repeats; ++r) {
    std::iota(items.begin(), items.end(), 0);
    std::iota(elements.begin(), elements.end(), 0);
    // A single group is the whole matrix; shuffling would only burn draws.
    if (groups > 1) {
      std::shuffle(items.begin(), items.end(), rng);
      std::shuffle(elements.begin(), elements.end(), rng);
    }
    const auto item_groups = internal::split_groups(items, groups);
    const auto element_groups = internal::split_groups(elements, groups);
    Partition part{std::vector<int>(p.n), std::vector<int>(p.m)};
    for (int l = 0; l < groups; ++l) {
      for (auto i : item_groups[l]) part.item_group[i] = l;
      for (auto j : element_groups[l]) part.element_group[j] = l;
      internal::draw_block(rng, p.density, item_groups[l], element_groups[l], marked);
    }
    partitions.push_back(std::move(part));
  }

  std::vector<std::vector<ElementIndex>> cover(p.n);
  for (ItemIndex i = 0; i < p.n; ++i) {
    for (ElementIndex j = 0; j < p.m; ++j) {
      if (marked[i][j]) cover[i].push_back(j);
    }
  }
  return {Instance(std::move(costs), std::move(weights), std::move(cover), p.budget),
          std::move(partitions)};
}

inline Instance gen_uniform(GenParams p) {
  if (p.family != Family::kUniform) {
    throw std::invalid_argument("gen_uniform requires the uniform family");
  }
  return gen_grouped_with_partitions(p).instance;
}

inline Instance gen_grouped(const GenParams& p) {
  if (p.family != Family::kGrouped) {
    throw std::invalid_argument("gen_grouped requires the grouped family");
  }
  return gen_grouped_with_partitions(p).instance;
}

inline Instance generate(const GenParams& p) {
  return gen_grouped_with_partitions(p).instance;
}

}  // namespace bmcp

#endif  // BMCP_INSTGEN_HPP_
