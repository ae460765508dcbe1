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

// Command-line front end: solve, oracle, stats, generate, bench.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bmcp/bmcp.hpp"

namespace {

void print_solution(std::ostream& out, const bmcp::Solution& sol) {
  out << "W " << sol.weight() << "\nC " << sol.cost() << "\nitems";
  for (bmcp::ItemIndex i : sol.items()) out << ' ' << i + 1;
  out << '\n';
}

bmcp::IntRange parse_range(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw CLI::ValidationError("range must be a:b");
  return {std::stoll(text.substr(0, colon)), std::stoll(text.substr(colon + 1))};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Budgeted maximum coverage solvers and tools"};
  app.require_subcommand(1);

  // solve
  auto* solve = app.add_subcommand("solve", "Run greedy or VDLS on an instance");
  std::string solve_path, algo = "vdls", pool = "neighbours", pick = "top",
                          init = "greedy", report_path;
  bmcp::SearchConfig cfg;
  solve->add_option("instance", solve_path, "Instance file (.json for JSON)")->required();
  solve->add_option("--algo", algo)->check(CLI::IsMember({"greedy", "vdls"}));
  solve->add_option("--depth", cfg.max_depth, "Maximum depth d")->capture_default_str();
  solve->add_option("--width", cfg.max_width, "Maximum width k")->capture_default_str();
  solve->add_option("--time", cfg.cutoff_seconds, "Cut-off in seconds")->capture_default_str();
  solve->add_option("--seed", cfg.seed)->capture_default_str();
  solve->add_option("--branch-pool", pool)->check(CLI::IsMember({"neighbours", "all"}));
  solve->add_option("--branch-pick", pick)->check(CLI::IsMember({"top", "random"}));
  solve->add_option("--init", init)->check(CLI::IsMember({"greedy", "empty", "random"}));
  solve->add_option("--report", report_path, "Write the run report as JSON");

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Exact branch and bound for small instances");
  std::string oracle_path;
  std::int64_t limit = 100000000;
  oracle->add_option("instance", oracle_path)->required();
  oracle->add_option("--limit", limit, "Node budget")->capture_default_str();

  // stats
  auto* stats = app.add_subcommand("stats", "Print density and neighbour statistics as JSON");
  std::string stats_path;
  stats->add_option("instance", stats_path)->required();

  // generate
  auto* gen = app.add_subcommand("generate", "Generate a random instance");
  bmcp::GenParams params;
  std::string family = "uniform", cost_range = "1:100", weight_range = "1:100", out_path;
  gen->add_option("--family", family)->check(CLI::IsMember({"uniform", "grouped"}));
  gen->add_option("--n", params.n)->required();
  gen->add_option("--m", params.m)->required();
  gen->add_option("--density", params.density)->required();
  gen->add_option("--budget", params.budget)->required();
  gen->add_option("--groups", params.groups)->capture_default_str();
  gen->add_option("--repeats", params.repeats)->capture_default_str();
  gen->add_option("--cost-range", cost_range)->capture_default_str();
  gen->add_option("--weight-range", weight_range)->capture_default_str();
  gen->add_option("--seed", params.seed)->capture_default_str();
  gen->add_option("--out", out_path, "Output path (.json for JSON)")->required();

  // bench
  auto* bench = app.add_subcommand("bench", "Run a batch experiment");
  std::string spec_path, csv_path;
  int jobs = 0;
  bench->add_option("--spec", spec_path)->required();
  bench->add_option("--out", csv_path)->required();
  bench->add_option("--jobs", jobs, "Worker threads (overrides the spec)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve) {
      const auto inst = bmcp::load_instance(solve_path);
      if (algo == "greedy") {
        print_solution(std::cout, bmcp::greedy_construct(inst));
        return 0;
      }
      cfg.branch_pool = bmcp::parse_branch_pool(pool);
      cfg.branch_pick = bmcp::parse_branch_pick(pick);
      cfg.init = bmcp::parse_init_mode(init);
      auto result = bmcp::run_vdls(inst, cfg);
      print_solution(std::cout, result.solution);
      if (!report_path.empty()) {
        std::ofstream out(report_path);
        out << bmcp::to_json(result.report).dump(2) << '\n';
      }
    } else if (*oracle) {
      const auto inst = bmcp::load_instance(oracle_path);
      auto result = bmcp::exact_opt(inst, limit);
      std::cout << "W* " << result.best_weight << "\nexact "
                << (result.exact ? "true" : "false") << "\nitems";
      for (bmcp::ItemIndex i : result.best_items) std::cout << ' ' << i + 1;
      std::cout << '\n';
    } else if (*stats) {
      const auto inst = bmcp::load_instance(stats_path);
      const auto s = bmcp::instance_stats(inst);
      nlohmann::json j = {{"n", inst.num_items()},
                          {"m", inst.num_elements()},
                          {"edges", inst.num_edges()},
                          {"alpha", s.alpha},
                          {"sigma", s.sigma},
                          {"mean_gamma", s.mean_gamma},
                          {"max_gamma", s.max_gamma}};
      std::cout << j.dump() << '\n';
    } else if (*gen) {
      params.family = family == "grouped" ? bmcp::Family::kGrouped : bmcp::Family::kUniform;
      params.cost_range = parse_range(cost_range);
      params.weight_range = parse_range(weight_range);
      bmcp::save_instance(bmcp::generate(params), out_path);
      std::cout << bmcp::instance_name(params) << '\n';
    } else if (*bench) {
      std::ifstream in(spec_path);
      if (!in) throw std::runtime_error("cannot open spec '" + spec_path + "'");
      auto spec = bmcp::parse_bench_spec(nlohmann::json::parse(in));
      if (jobs > 0) spec.jobs = jobs;
      auto result = bmcp::run_bench(spec);
      std::ofstream csv(csv_path);
      bmcp::write_runs_csv(csv, result.rows);
      std::ofstream summary(csv_path + ".summary.csv");
      bmcp::write_summary_csv(summary, result.summary);
      bmcp::write_summary_csv(std::cout, result.summary);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
