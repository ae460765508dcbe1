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

#ifndef BMCP_HARNESS_HPP_
#define BMCP_HARNESS_HPP_

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <iomanip>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"

#include "bmcp/greedy.hpp"
#include "bmcp/instance.hpp"
#include "bmcp/instgen.hpp"
#include "bmcp/neighbours.hpp"
#include "bmcp/vdls.hpp"

namespace bmcp {

enum class Algo { kVdls, kGreedy };

inline std::string_view to_string(Algo a) { return a == Algo::kVdls ? "vdls" : "greedy"; }
inline Algo parse_algo(std::string_view s) {
  if (s == "vdls") return Algo::kVdls;
  if (s == "greedy") return Algo::kGreedy;
  throw std::invalid_argument("unknown algorithm '" + std::string(s) + "'");
}

struct BenchConfig {
  Algo algo = Algo::kVdls;
  // Seed and cutoff are overridden per run.
  SearchConfig search;

  std::string label() const {
    std::ostringstream out;
    out << to_string(algo);
    if (algo == Algo::kVdls) {
      out << " d=" << search.max_depth << " k=" << search.max_width << ' '
          << to_string(search.branch_pool) << ' ' << to_string(search.branch_pick)
          << ' ' << to_string(search.init);
    }
    return out.str();
  }
};

struct InstanceSource {
  std::string name;
  std::optional<std::string> path;
  std::optional<GenParams> params;
};

struct BenchSpec {
  std::vector<InstanceSource> instances;
  int runs = 10;
  double cutoff_seconds = 600.0;
  std::uint64_t base_seed = 0;
  std::vector<BenchConfig> configs;
  int jobs = 1;

  void validate() const {
    if (runs < 1) throw std::invalid_argument("runs must be >= 1");
    if (!(cutoff_seconds > 0)) throw std::invalid_argument("cutoff must be > 0");
    if (configs.empty()) throw std::invalid_argument("no configurations");
    if (jobs < 1) throw std::invalid_argument("jobs must be >= 1");
  }
};

namespace internal {

inline IntRange parse_range(const nlohmann::json& j) {
  auto v = j.get<std::vector<std::int64_t>>();
  if (v.size() != 2) throw std::invalid_argument("range must be [lo, hi]");
  return {v[0], v[1]};
}

inline void apply_config_fields(const nlohmann::json& j, BenchConfig& c,
                                bool with_shape = true) {
  if (j.contains("algo")) c.algo = parse_algo(j["algo"].get<std::string>());
  if (with_shape && j.contains("d")) c.search.max_depth = j["d"].get<int>();
  if (with_shape && j.contains("k")) c.search.max_width = j["k"].get<int>();
  if (j.contains("branch_pool")) {
    c.search.branch_pool = parse_branch_pool(j["branch_pool"].get<std::string>());
  }
  if (j.contains("branch_pick")) {
    c.search.branch_pick = parse_branch_pick(j["branch_pick"].get<std::string>());
  }
  if (j.contains("init")) c.search.init = parse_init_mode(j["init"].get<std::string>());
}

}  // namespace internal

inline GenParams gen_params_from_json(const nlohmann::json& j) {
  GenParams p;
  const std::string family = j.value("family", "uniform");
  if (family == "uniform") {
    p.family = Family::kUniform;
  } else if (family == "grouped") {
    p.family = Family::kGrouped;
  } else {
    throw std::invalid_argument("unknown family '" + family + "'");
  }
  p.n = j.at("n").get<ItemIndex>();
  p.m = j.at("m").get<ElementIndex>();
  p.budget = j.at("budget").get<Cost>();
  p.density = j.at("density").get<double>();
  p.groups = j.value("groups", 25);
  p.repeats = j.value("repeats", 3);
  if (j.contains("cost_range")) p.cost_range = internal::parse_range(j["cost_range"]);
  if (j.contains("weight_range")) p.weight_range = internal::parse_range(j["weight_range"]);
  p.seed = j.value("seed", std::uint64_t{0});
  p.validate();
  return p;
}

// Schema:
//   instances: [path, ...]
//   generate:  [{family, n, m, density, budget, groups?, repeats?,
//                cost_range?, weight_range?, seed?, name?}, ...]
//   runs, cutoff, base_seed, jobs
//   configs:   [{algo?, d?, k?, branch_pool?, branch_pick?, init?}, ...]
//   grid:      {d: [...], k: [...], <config fields>}  (cartesian d x k)
inline BenchSpec parse_bench_spec(const nlohmann::json& j) {
  BenchSpec spec;
  try {
    for (const auto& path : j.value("instances", nlohmann::json::array())) {
      auto p = path.get<std::string>();
      auto slash = p.find_last_of('/');
      spec.instances.push_back({slash == std::string::npos ? p : p.substr(slash + 1), p, {}});
    }
    for (const auto& g : j.value("generate", nlohmann::json::array())) {
      GenParams params = gen_params_from_json(g);
      spec.instances.push_back({g.value("name", instance_name(params)), {}, params});
    }
    spec.runs = j.value("runs", spec.runs);
    spec.cutoff_seconds = j.value("cutoff", spec.cutoff_seconds);
    spec.base_seed = j.value("base_seed", spec.base_seed);
    spec.jobs = j.value("jobs", spec.jobs);
    for (const auto& c : j.value("configs", nlohmann::json::array())) {
      BenchConfig config;
      internal::apply_config_fields(c, config);
      spec.configs.push_back(config);
    }
    if (j.contains("grid")) {
      const auto& grid = j["grid"];
      BenchConfig base;
      internal::apply_config_fields(grid, base, /*with_shape=*/false);
      auto depths = grid.at("d").get<std::vector<int>>();
      auto widths = grid.at("k").get<std::vector<int>>();
      for (int d : depths) {
        for (int k : widths) {
          BenchConfig config = base;
          config.search.max_depth = d;
          config.search.max_width = k;
          spec.configs.push_back(config);
        }
      }
    }
    if (spec.configs.empty()) spec.configs.emplace_back();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("invalid bench spec: ") + e.what());
  }
  spec.validate();
  return spec;
}

struct RunRow {
  std::string instance;
  BenchConfig config;
  std::uint64_t seed = 0;
  Weight weight = 0;
  Cost cost = 0;
  double time_to_best = 0.0;
  std::string terminated_by;
  // Non-empty when the instance could not be loaded.
  std::string error;
};

struct SummaryRow {
  std::string instance;
  BenchConfig config;
  int runs = 0;
  Weight best = 0;
  double average = 0.0;
  double average_time_to_best = 0.0;
};

struct BenchResult {
  std::vector<RunRow> rows;
  std::vector<SummaryRow> summary;
};

// Groups successful rows by (instance, config label) in order of first
// appearance. "average" is the mean of per-run final W.
inline std::vector<SummaryRow> summarize(const std::vector<RunRow>& rows) {
  std::vector<SummaryRow> out;
  std::map<std::pair<std::string, std::string>, std::size_t> index;
  for (const auto& row : rows) {
    if (!row.error.empty()) continue;
    auto key = std::make_pair(row.instance, row.config.label());
    auto [it, inserted] = index.emplace(key, out.size());
    if (inserted) {
      SummaryRow s;
      s.instance = row.instance;
      s.config = row.config;
      s.best = row.weight;
      out.push_back(s);
    }
    SummaryRow& s = out[it->second];
    ++s.runs;
    s.best = std::max(s.best, row.weight);
    s.average += static_cast<double>(row.weight);
    s.average_time_to_best += row.time_to_best;
  }
  for (auto& s : out) {
    s.average /= s.runs;
    s.average_time_to_best /= s.runs;
  }
  return out;
}

// Runs every (instance, config, run) task on `spec.jobs` worker threads.
// Each run uses seed base_seed + run index. Rows come back in task order.
inline BenchResult run_bench(const BenchSpec& spec) {
  spec.validate();
  struct Loaded {
    std::optional<Instance> instance;
    std::optional<NeighbourGraph> gamma;
    std::string error;
  };
  std::vector<Loaded> loaded(spec.instances.size());
  for (std::size_t t = 0; t < spec.instances.size(); ++t) {
    const auto& src = spec.instances[t];
    try {
      loaded[t].instance = src.path ? load_instance(*src.path) : generate(*src.params);
      loaded[t].gamma = build_neighbour_graph(*loaded[t].instance);
    } catch (const std::exception& e) {
      loaded[t].error = e.what();
    }
  }

  struct Task {
    std::size_t instance;
    std::size_t config;
    int run;
  };
  std::vector<Task> tasks;
  std::vector<RunRow> rows;
  for (std::size_t t = 0; t < spec.instances.size(); ++t) {
    for (std::size_t c = 0; c < spec.configs.size(); ++c) {
      if (!loaded[t].error.empty()) {
        RunRow row;
        row.instance = spec.instances[t].name;
        row.config = spec.configs[c];
        row.terminated_by = "error";
        row.error = loaded[t].error;
        rows.push_back(row);
        continue;
      }
      for (int r = 0; r < spec.runs; ++r) tasks.push_back({t, c, r});
    }
  }

  std::vector<RunRow> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t id = next++; id < tasks.size(); id = next++) {
      const Task& task = tasks[id];
      const Instance& inst = *loaded[task.instance].instance;
      RunRow& row = results[id];
      row.instance = spec.instances[task.instance].name;
      row.config = spec.configs[task.config];
      row.seed = spec.base_seed + static_cast<std::uint64_t>(task.run);
      std::vector<ItemIndex> items;
      if (row.config.algo == Algo::kGreedy) {
        const auto start = Clock::now();
        Solution sol = greedy_construct(inst);
        row.time_to_best = std::chrono::duration<double>(Clock::now() - start).count();
        row.terminated_by = "complete";
        items = sol.items();
      } else {
        SearchConfig cfg = row.config.search;
        cfg.seed = row.seed;
        cfg.cutoff_seconds = spec.cutoff_seconds;
        auto result = run_vdls(inst, *loaded[task.instance].gamma, cfg);
        row.time_to_best = result.report.time_to_best;
        row.terminated_by = std::string(to_string(result.report.terminated_by));
        items = result.solution.items();
      }
      const Evaluation check = evaluate(inst, items);
      if (check.cost > inst.budget()) {
        throw std::logic_error("infeasible solution produced for " + row.instance);
      }
      row.weight = check.weight;
      row.cost = check.cost;
    }
  };
  // Exceptions from workers are fatal bugs; surface the first one.
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto guarded = [&] {
    try {
      worker();
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = tasks.size();
    }
  };
  const int jobs = std::max(1, std::min<int>(spec.jobs, static_cast<int>(tasks.size())));
  std::vector<std::thread> pool;
  for (int w = 1; w < jobs; ++w) pool.emplace_back(guarded);
  guarded();
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);

  rows.insert(rows.end(), results.begin(), results.end());
  BenchResult out;
  out.summary = summarize(rows);
  out.rows = std::move(rows);
  return out;
}

namespace internal {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline void write_config_fields(std::ostream& out, const BenchConfig& c) {
  out << to_string(c.algo) << ',' << c.search.max_depth << ',' << c.search.max_width
      << ',' << to_string(c.search.branch_pool) << ',' << to_string(c.search.branch_pick)
      << ',' << to_string(c.search.init);
}

}  // namespace internal

inline constexpr const char* kRunCsvHeader =
    "instance,algo,d,k,branch_pool,branch_pick,init,seed,W,C,time_to_best,terminated_by";
inline constexpr const char* kSummaryCsvHeader =
    "instance,algo,d,k,branch_pool,branch_pick,init,runs,best_W,avg_W,avg_time_to_best";

// Error rows leave W, C and time_to_best empty and carry "error: <message>".
inline void write_runs_csv(std::ostream& out, const std::vector<RunRow>& rows) {
  out << kRunCsvHeader << '\n';
  for (const auto& r : rows) {
    out << internal::csv_field(r.instance) << ',';
    internal::write_config_fields(out, r.config);
    if (!r.error.empty()) {
      out << ",,,,," << internal::csv_field("error: " + r.error) << '\n';
      continue;
    }
    out << ',' << r.seed << ',' << r.weight << ',' << r.cost << ',' << std::fixed
        << std::setprecision(6) << r.time_to_best << std::defaultfloat << ','
        << r.terminated_by << '\n';
  }
}

inline void write_summary_csv(std::ostream& out, const std::vector<SummaryRow>& rows) {
  out << kSummaryCsvHeader << '\n';
  for (const auto& s : rows) {
    out << internal::csv_field(s.instance) << ',';
    internal::write_config_fields(out, s.config);
    out << ',' << s.runs << ',' << s.best << ',' << std::fixed << std::setprecision(3)
        << s.average << ',' << std::setprecision(6) << s.average_time_to_best
        << std::defaultfloat << '\n';
  }
}

// Mean of per-instance best and average W for one configuration, with a flag
// when it beats the reference configuration.
struct ConfigComparison {
  std::string label;
  int instances = 0;
  double mean_best = 0.0;
  double mean_average = 0.0;
  bool beats_reference = false;
};

// Compares every configuration against `reference` (index into the distinct
// configurations in order of appearance).
inline std::vector<ConfigComparison> compare_configs(const std::vector<SummaryRow>& summary,
                                                     std::size_t reference = 0) {
  std::vector<ConfigComparison> out;
  std::map<std::string, std::size_t> index;
  for (const auto& s : summary) {
    auto [it, inserted] = index.emplace(s.config.label(), out.size());
    if (inserted) out.push_back({s.config.label()});
    auto& c = out[it->second];
    ++c.instances;
    c.mean_best += static_cast<double>(s.best);
    c.mean_average += s.average;
  }
  for (auto& c : out) {
    c.mean_best /= c.instances;
    c.mean_average /= c.instances;
  }
  if (reference < out.size()) {
    for (auto& c : out) c.beats_reference = c.mean_best > out[reference].mean_best;
  }
  return out;
}

}  // namespace bmcp

#endif  // BMCP_HARNESS_HPP_
