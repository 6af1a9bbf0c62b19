// Copyright 2026 The Authors.
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

// submax: solve / round / baseline / bench front end.
//
// Exit codes: 0 success, 2 invalid or infeasible input, 3 guard abort.

#include <chrono>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "submax/baseline.hpp"
#include "submax/generators.hpp"
#include "submax/packing.hpp"
#include "submax/report.hpp"
#include "submax/rng.hpp"
#include "submax/rounding.hpp"

namespace {

using nlohmann::ordered_json;

struct CommonFlags {
  std::string instance;
  std::string report_path;
  double eps = 0.1;
  std::uint64_t seed = 0;
  bool strict = false;
  bool dry_run = false;
};

void write_report(const std::string& path, const ordered_json& j) {
  if (path.empty()) return;
  submax::save_json_file(path, j);
}

submax::Point point_from_file(const std::string& path) {
  nlohmann::json j = submax::load_json_file(path);
  if (!j.contains("x") || !j.at("x").is_array())
    throw submax::input_error("solution file must contain an \"x\" array");
  return j.at("x").get<submax::Point>();
}

int run_solve(const CommonFlags& common, const std::string& constraint,
              const std::string& oracle, int k, bool randomized, int enum_size,
              double lambda0, bool lambda_race, double eps_est,
              std::uint64_t est_seed, long long max_rounds) {
  submax::SolveConfig config;
  config.constraint = submax::constraint_from_name(constraint);
  config.oracle_mode = oracle;
  config.instance = submax::load_bundle(common.instance);
  config.eps = common.eps;
  config.seed = common.seed;
  config.randomized = randomized;
  config.enum_size = enum_size;
  config.strict = common.strict;
  config.dry_run = common.dry_run;
  if (lambda0 > 0) config.lambda0 = lambda0;
  config.max_rounds = max_rounds;
  config.lambda_race = lambda_race;
  config.eps_est = eps_est;
  config.est_seed = est_seed;
  if (k > 0) config.k = k;

  submax::SolverReport report = submax::run(config);
  write_report(common.report_path, submax::report_to_json(report));
  if (report.dry_run) {
    std::cout << "config ok: " << report.config_echo.dump() << "\n";
    return 0;
  }
  std::cout << "objective " << report.objective << "  rounds " << report.adaptive_rounds
            << "  oracle_calls " << report.oracle_calls << "  slack "
            << report.feasibility_slack << "\n";
  return report.aborted ? 3 : 0;
}

int run_round(const CommonFlags& common, const std::string& scheme,
              const std::string& x_path, int k, double crs_c, int samples) {
  submax::InstanceBundle bundle = submax::load_bundle(common.instance);
  submax::Point x = point_from_file(x_path);

  std::shared_ptr<const submax::SetFunction> f;
  if (bundle.coverage)
    f = std::make_shared<submax::CoverageFunction>(*bundle.coverage);
  else if (bundle.weights)
    f = std::make_shared<submax::ModularSetFunction>(*bundle.weights);
  else
    throw submax::input_error("round: instance needs an objective");

  ordered_json rows = ordered_json::array();
  double value_sum = 0;
  int feasible_count = 0;
  for (int s = 0; s < samples; ++s) {
    std::uint64_t sample_seed = submax::mix64(common.seed, static_cast<std::uint64_t>(s));
    submax::RoundingOutcome out;
    if (scheme == "cardinality") {
      if (k <= 0) throw submax::input_error("round --scheme cardinality needs --k");
      out = submax::round_cardinality(*f, x, k, common.eps, sample_seed);
    } else if (scheme == "partition") {
      if (!bundle.partition)
        throw submax::input_error("round --scheme partition needs a partition in the instance");
      out = submax::round_simple_partition(*f, x, *bundle.partition, sample_seed);
    } else if (scheme == "crs") {
      if (!bundle.packing)
        throw submax::input_error("round --scheme crs needs a packing matrix in the instance");
      out = submax::round_crs_packing(*f, x, *bundle.packing, crs_c, sample_seed);
    } else {
      throw submax::input_error("unknown rounding scheme: " + scheme);
    }
    value_sum += out.value;
    feasible_count += out.feasible ? 1 : 0;
    rows.push_back(ordered_json{{"seed", out.seed},
                                {"value", out.value},
                                {"feasible", out.feasible},
                                {"set", out.chosen.indices()}});
  }

  ordered_json j;
  j["scheme"] = scheme;
  j["samples"] = samples;
  j["mean_value"] = samples > 0 ? value_sum / samples : 0.0;
  j["feasible_count"] = feasible_count;
  j["rows"] = rows;
  write_report(common.report_path, j);
  std::cout << "scheme " << scheme << "  mean_value " << j["mean_value"]
            << "  feasible " << feasible_count << "/" << samples << "\n";
  return 0;
}

int run_baseline(const CommonFlags& common, const std::string& constraint,
                 const std::string& oracle, int k, double tolerance) {
  submax::SolveConfig config;
  config.constraint = submax::constraint_from_name(constraint);
  config.oracle_mode = oracle;
  config.instance = submax::load_bundle(common.instance);
  config.eps = common.eps;
  config.seed = common.seed;
  config.strict = common.strict;
  if (k > 0) config.k = k;

  submax::BaselineReport report = submax::compare_baseline(config, tolerance);
  write_report(common.report_path, submax::baseline_to_json(report));
  std::cout << (report.pass ? "PASS" : "FAIL") << "  ratio " << report.ratio
            << "  floor " << report.floor << "\n";
  return report.pass ? 0 : 1;
}

int run_bench(const CommonFlags& common, const std::string& constraint,
              const std::string& sizes) {
  // Rows of (n, rounds, calls) across generated instances, for eyeballing
  // adaptivity growth.
  ordered_json rows = ordered_json::array();
  std::stringstream ss(sizes);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    int n = 0, m = 0;
    if (auto pos = tok.find('x'); pos != std::string::npos) {
      n = std::stoi(tok.substr(0, pos));
      m = std::stoi(tok.substr(pos + 1));
    } else {
      n = std::stoi(tok);
    }
    submax::SolveConfig config;
    config.oracle_mode = "coverage";
    config.eps = common.eps;
    config.seed = common.seed;
    config.instance.coverage =
        submax::generate_random_coverage(2 * n, n, std::min(1.0, 8.0 / n), common.seed);
    if (constraint == "packing") {
      config.constraint = submax::ConstraintKind::kPacking;
      config.instance.packing = submax::generate_random_packing(
          std::max(1, m), n, std::min(1.0, 4.0 / n), common.eps / n, common.seed);
    } else {
      config.constraint = submax::ConstraintKind::kCardinality;
      config.k = std::max(1, n / 8);
    }
    auto t0 = std::chrono::steady_clock::now();
    submax::SolverReport r = submax::run(config);
    auto t1 = std::chrono::steady_clock::now();
    rows.push_back(ordered_json{
        {"n", n},
        {"m", m},
        {"rounds", r.adaptive_rounds},
        {"oracle_calls", r.oracle_calls},
        {"objective", r.objective},
        {"wall_time_ms", std::chrono::duration<double, std::milli>(t1 - t0).count()}});
    std::cout << "n=" << n << (m ? " m=" + std::to_string(m) : "")
              << "  rounds=" << r.adaptive_rounds << "  calls=" << r.oracle_calls << "\n";
  }
  ordered_json j;
  j["constraint"] = constraint;
  j["rows"] = rows;
  write_report(common.report_path, j);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"parallel submodular maximization over packing constraints"};
  app.require_subcommand(1);

  CommonFlags common;
  std::string constraint = "cardinality";
  std::string oracle = "coverage";
  std::string scheme = "cardinality";
  std::string x_path;
  std::string sizes = "64x8,256x16";
  int k = 0;
  bool randomized = false;
  int enum_size = -1;
  double lambda0 = 0;
  bool lambda_race = false;
  double eps_est = 0.1;
  std::uint64_t est_seed = 0;
  long long max_rounds = 1'000'000;
  double crs_c = 0.5;
  int samples = 1;
  double tolerance = 0.05;

  auto add_common = [&](CLI::App* cmd, bool need_instance) {
    auto* opt = cmd->add_option("--instance", common.instance, "instance file (JSON)");
    if (need_instance) opt->required();
    cmd->add_option("--report", common.report_path, "write the JSON report here");
    cmd->add_option("--eps", common.eps, "accuracy parameter");
    cmd->add_option("--seed", common.seed, "master seed");
    cmd->add_flag("--strict", common.strict, "rescale packing output to hard feasibility");
    cmd->add_flag("--dry-run", common.dry_run, "validate and echo the config, run nothing");
  };

  CLI::App* solve = app.add_subcommand("solve", "run a solver");
  add_common(solve, true);
  solve->add_option("--constraint", constraint, "cardinality|knapsack|packing");
  solve->add_option("--oracle", oracle, "coverage|modular|blackbox");
  solve->add_option("--k", k, "cardinality budget");
  solve->add_flag("--randomized", randomized, "discrete randomized variant");
  solve->add_option("--enum", enum_size, "knapsack partial-enumeration guess size (0..3)");
  solve->add_option("--lambda0", lambda0, "threshold start (default: sum of singletons)");
  solve->add_flag("--lambda-race", lambda_race, "race geometric opt estimates (packing)");
  solve->add_option("--eps-est", eps_est, "black-box estimator accuracy");
  solve->add_option("--est-seed", est_seed, "black-box estimator seed");
  solve->add_option("--max-rounds", max_rounds, "adaptive-round guard");

  CLI::App* round = app.add_subcommand("round", "round a fractional solution");
  add_common(round, true);
  round->add_option("--scheme", scheme, "cardinality|partition|crs");
  round->add_option("--x", x_path, "fractional solution file {\"x\": [...]}")->required();
  round->add_option("--k", k, "cardinality budget");
  round->add_option("--crs-c", crs_c, "CRS scaling constant in (0,1)");
  round->add_option("--samples", samples, "number of seeded samples");

  CLI::App* baseline = app.add_subcommand("baseline", "compare against brute force");
  add_common(baseline, true);
  baseline->add_option("--constraint", constraint, "cardinality|knapsack|packing");
  baseline->add_option("--oracle", oracle, "coverage|modular");
  baseline->add_option("--k", k, "cardinality budget");
  baseline->add_option("--tolerance", tolerance, "extra slack on the approximation floor");

  CLI::App* bench = app.add_subcommand("bench", "measure rounds on generated instances");
  add_common(bench, false);
  bench->add_option("--constraint", constraint, "cardinality|packing");
  bench->add_option("--sizes", sizes, "comma list of n or nxm");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed())
      return run_solve(common, constraint, oracle, k, randomized, enum_size, lambda0,
                       lambda_race, eps_est, est_seed, max_rounds);
    if (round->parsed()) return run_round(common, scheme, x_path, k, crs_c, samples);
    if (baseline->parsed()) return run_baseline(common, constraint, oracle, k, tolerance);
    if (bench->parsed()) return run_bench(common, constraint, sizes);
  } catch (const submax::input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const submax::guard_abort& e) {
    std::cerr << "abort: " << e.what() << "\n";
    return 3;
  } catch (const submax::oracle_error& e) {
    std::cerr << "oracle error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
