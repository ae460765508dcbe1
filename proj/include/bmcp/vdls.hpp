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

#ifndef BMCP_VDLS_HPP_
#define BMCP_VDLS_HPP_

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "bmcp/greedy.hpp"
#include "bmcp/instance.hpp"
#include "bmcp/neighbours.hpp"
#include "bmcp/solution.hpp"

namespace bmcp {

using Rng = std::mt19937_64;
using Clock = std::chrono::steady_clock;

enum class BranchPool { kNeighbours, kAllItems };
enum class BranchPick { kTopGain, kRandomK };
enum class InitMode { kGreedy, kEmpty, kRandom };
enum class Termination { kCutoff, kStagnation };

inline std::string_view to_string(BranchPool v) {
  return v == BranchPool::kNeighbours ? "neighbours" : "all";
}
inline std::string_view to_string(BranchPick v) {
  return v == BranchPick::kTopGain ? "top" : "random";
}
inline std::string_view to_string(InitMode v) {
  switch (v) {
    case InitMode::kGreedy: return "greedy";
    case InitMode::kEmpty: return "empty";
    case InitMode::kRandom: return "random";
  }
  return "?";
}
inline std::string_view to_string(Termination v) {
  return v == Termination::kCutoff ? "cutoff" : "stagnation";
}

inline BranchPool parse_branch_pool(std::string_view s) {
  if (s == "neighbours" || s == "neighbors") return BranchPool::kNeighbours;
  if (s == "all" || s == "all_items") return BranchPool::kAllItems;
  throw std::invalid_argument("unknown branch pool '" + std::string(s) + "'");
}
inline BranchPick parse_branch_pick(std::string_view s) {
  if (s == "top" || s == "top_gain") return BranchPick::kTopGain;
  if (s == "random" || s == "random_k") return BranchPick::kRandomK;
  throw std::invalid_argument("unknown branch pick '" + std::string(s) + "'");
}
inline InitMode parse_init_mode(std::string_view s) {
  if (s == "greedy") return InitMode::kGreedy;
  if (s == "empty") return InitMode::kEmpty;
  if (s == "random") return InitMode::kRandom;
  throw std::invalid_argument("unknown init mode '" + std::string(s) + "'");
}

struct SearchConfig {
  int max_depth = 8;
  int max_width = 7;
  double cutoff_seconds = 600.0;
  std::uint64_t seed = 0;
  BranchPool branch_pool = BranchPool::kNeighbours;
  BranchPick branch_pick = BranchPick::kTopGain;
  InitMode init = InitMode::kGreedy;

  void validate() const {
    if (max_depth < 1) throw std::invalid_argument("max depth must be >= 1");
    if (max_width < 1) throw std::invalid_argument("max width must be >= 1");
    if (!(cutoff_seconds > 0)) throw std::invalid_argument("cutoff must be > 0");
  }
};

struct RunReport {
  Weight best_weight = 0;
  Cost best_cost = 0;
  double time_to_best = 0.0;
  std::int64_t root_iterations = 0;
  std::int64_t improvements = 0;
  std::int64_t nodes_expanded = 0;
  Termination terminated_by = Termination::kStagnation;
};

inline nlohmann::json to_json(const RunReport& r) {
  return {{"best_weight", r.best_weight},
          {"best_cost", r.best_cost},
          {"time_to_best", r.time_to_best},
          {"root_iterations", r.root_iterations},
          {"improvements", r.improvements},
          {"nodes_expanded", r.nodes_expanded},
          {"terminated_by", std::string(to_string(r.terminated_by))}};
}

// Items visited in the current search tree, clearable in O(|visited|).
class VisitedSet {
 public:
  explicit VisitedSet(ItemIndex n) : flags_(n, 0) {}

  bool contains(ItemIndex i) const { return flags_[i] != 0; }
  void insert(ItemIndex i) {
    if (!flags_[i]) {
      flags_[i] = 1;
      members_.push_back(i);
    }
  }
  void clear() {
    for (ItemIndex i : members_) flags_[i] = 0;
    members_.clear();
  }
  std::size_t size() const { return members_.size(); }

 private:
  std::vector<std::uint8_t> flags_;
  std::vector<ItemIndex> members_;
};

// Bounded-width, bounded-depth depth-first flip search with early stop.
// Holds the per-run state (RNG, deadline, node counter); one instance per
// search thread.
class LocalSearch {
 public:
  LocalSearch(const Instance& inst, const NeighbourGraph& gamma,
              const SearchConfig& cfg, Rng& rng,
              Clock::time_point deadline = Clock::time_point::max())
      : inst_(inst), gamma_(gamma), cfg_(cfg), rng_(rng), deadline_(deadline) {}

  // Branch nodes below the node that just flipped p, given the post-flip
  // solution. Unvisited items whose flip keeps C <= L, ordered by descending
  // gain (ascending index on ties) or uniformly at random, at most k of them.
  std::vector<ItemIndex> branch_candidates(const Solution& current, ItemIndex p,
                                           const VisitedSet& visited) {
    std::vector<ItemIndex> pool;
    auto consider = [&](ItemIndex i) {
      if (i != p && !visited.contains(i) && current.flip_feasible(inst_, i)) {
        pool.push_back(i);
      }
    };
    if (cfg_.branch_pool == BranchPool::kNeighbours) {
      for (ItemIndex i : gamma_.neighbours(p)) consider(i);
    } else {
      for (ItemIndex i = 0; i < inst_.num_items(); ++i) consider(i);
    }
    const std::size_t width =
        std::min(pool.size(), static_cast<std::size_t>(cfg_.max_width));

    if (cfg_.branch_pick == BranchPick::kRandomK) {
      // Partial Fisher-Yates: a uniform random ordered sample of `width`.
      for (std::size_t t = 0; t < width; ++t) {
        std::uniform_int_distribution<std::size_t> pick(t, pool.size() - 1);
        std::swap(pool[t], pool[pick(rng_)]);
      }
      pool.resize(width);
      return pool;
    }

    std::vector<std::pair<Weight, ItemIndex>> scored;
    scored.reserve(pool.size());
    for (ItemIndex i : pool) scored.emplace_back(current.gain(inst_, i), i);
    auto by_gain = [](const auto& a, const auto& b) {
      return a.first != b.first ? a.first > b.first : a.second < b.second;
    };
    std::partial_sort(scored.begin(), scored.begin() + width, scored.end(), by_gain);
    pool.resize(width);
    for (std::size_t t = 0; t < width; ++t) pool[t] = scored[t].second;
    return pool;
  }

  // Flips p in `current` and searches below it. Returns the first solution
  // found with W > input_weight, or nullopt. `current` is restored before
  // returning either way. `visited` is shared by the whole tree.
  std::optional<Solution> search(Weight input_weight, Solution& current,
                                 ItemIndex p, int depth, VisitedSet& visited) {
    if (timed_out_) return std::nullopt;
    ++nodes_;
    if ((nodes_ & 1023) == 0 && Clock::now() >= deadline_) {
      timed_out_ = true;
      return std::nullopt;
    }
    current.flip(inst_, p);
    std::optional<Solution> found;
    if (current.weight() > input_weight) {
      found = current;
    } else if (depth < cfg_.max_depth) {
      for (ItemIndex q : branch_candidates(current, p, visited)) {
        visited.insert(q);
        found = search(input_weight, current, q, depth + 1, visited);
        if (found || timed_out_) break;
      }
    }
    current.flip(inst_, p);
    return found;
  }

  std::int64_t nodes_expanded() const { return nodes_; }
  bool timed_out() const { return timed_out_; }

 private:
  const Instance& inst_;
  const NeighbourGraph& gamma_;
  const SearchConfig& cfg_;
  Rng& rng_;
  Clock::time_point deadline_;
  std::int64_t nodes_ = 0;
  bool timed_out_ = false;
};

inline std::vector<ItemIndex> branch_candidates(const Instance& inst,
                                                const NeighbourGraph& gamma,
                                                const SearchConfig& cfg,
                                                const Solution& current, ItemIndex p,
                                                const VisitedSet& visited, Rng& rng) {
  return LocalSearch(inst, gamma, cfg, rng).branch_candidates(current, p, visited);
}

// One search tree without a deadline. `current` is left unchanged.
inline std::optional<Solution> local_search(const Instance& inst,
                                            const NeighbourGraph& gamma,
                                            const SearchConfig& cfg,
                                            const Solution& input, Solution& current,
                                            ItemIndex p, int depth, VisitedSet& visited,
                                            Rng& rng) {
  return LocalSearch(inst, gamma, cfg, rng).search(input.weight(), current, p, depth,
                                                   visited);
}

// Adds uniformly random unselected items until the next one would exceed the
// budget; that last item is dropped.
inline Solution random_initial_solution(const Instance& inst, Rng& rng) {
  std::vector<ItemIndex> order(inst.num_items());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  Solution sol(inst);
  for (ItemIndex i : order) {
    sol.flip(inst, i);
    if (sol.cost() > inst.budget()) {
      sol.flip(inst, i);
      break;
    }
  }
  return sol;
}

struct VdlsResult {
  Solution solution;
  RunReport report;
};

// Main loop: cycle through a random permutation of root items, run one tree
// per feasible root and adopt strict improvements. Stops at the cutoff or
// after n consecutive roots without improvement.
inline VdlsResult run_vdls(const Instance& inst, const NeighbourGraph& gamma,
                           const SearchConfig& cfg) {
  cfg.validate();
  if (gamma.num_items() != inst.num_items()) {
    throw std::invalid_argument("neighbour graph does not match instance");
  }
  const auto start = Clock::now();
  const auto budget = std::chrono::duration_cast<Clock::duration>(
      std::chrono::duration<double>(cfg.cutoff_seconds));
  const auto deadline = start + budget;
  auto elapsed = [&] {
    return std::min(std::chrono::duration<double>(Clock::now() - start).count(),
                    cfg.cutoff_seconds);
  };

  Rng rng(cfg.seed);
  Solution best(inst);
  if (cfg.init == InitMode::kGreedy) {
    best = greedy_construct(inst);
  } else if (cfg.init == InitMode::kRandom) {
    best = random_initial_solution(inst, rng);
  }

  RunReport report;
  report.time_to_best = elapsed();
  const ItemIndex n = inst.num_items();
  std::vector<ItemIndex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);

  LocalSearch searcher(inst, gamma, cfg, rng, deadline);
  VisitedSet visited(n);
  Solution current = best;
  report.terminated_by = Termination::kStagnation;
  std::int64_t step = 0;
  ItemIndex pos = 0;
  while (n > 0) {
    if (Clock::now() >= deadline) {
      report.terminated_by = Termination::kCutoff;
      break;
    }
    const ItemIndex root = order[pos];
    bool adopted = false;
    if (best.flip_feasible(inst, root)) {
      visited.clear();
      visited.insert(root);
      auto improved = searcher.search(best.weight(), current, root, 0, visited);
      if (improved && improved->weight() > best.weight()) {
        best = std::move(*improved);
        current = best;
        adopted = true;
        ++report.improvements;
        report.time_to_best = elapsed();
      }
      if (searcher.timed_out()) {
        ++report.root_iterations;
        report.terminated_by = Termination::kCutoff;
        break;
      }
    }
    ++report.root_iterations;
    pos = (pos + 1) % n;
    // Counts consecutive roots without improvement, so stagnation means every
    // root, including the last improving one, was tried on the final S.
    step = adopted ? 0 : step + 1;
    if (step >= n) break;
  }
  report.best_weight = best.weight();
  report.best_cost = best.cost();
  report.nodes_expanded = searcher.nodes_expanded();
  return {std::move(best), report};
}

inline VdlsResult run_vdls(const Instance& inst, const SearchConfig& cfg) {
  return run_vdls(inst, build_neighbour_graph(inst), cfg);
}

}  // namespace bmcp

#endif  // BMCP_VDLS_HPP_
