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

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "submax/instance_io.hpp"
#include "submax/multilinear.hpp"
#include "submax/trace.hpp"

namespace submax {

enum class ConstraintKind { kCardinality, kKnapsack, kPacking };

const char* constraint_name(ConstraintKind c);
ConstraintKind constraint_from_name(const std::string& name);

struct SolveConfig {
  ConstraintKind constraint = ConstraintKind::kCardinality;
  std::string oracle_mode = "coverage";  // coverage | modular | blackbox
  InstanceBundle instance;
  double eps = 0.1;
  std::uint64_t seed = 0;
  bool randomized = false;
  int enum_size = -1;  // >= 0: knapsack partial enumeration with that guess size
  bool strict = false;
  bool dry_run = false;
  std::optional<double> lambda0;
  long long max_rounds = 1'000'000;
  bool lambda_race = false;    // packing: race the opt-estimate schedule
  double eps_est = 0.1;        // black-box estimator accuracy
  std::uint64_t est_seed = 0;  // black-box estimator seed
  std::optional<int> k;        // cardinality budget; falls back to the bundle

  int resolved_k() const;
  Objective build_objective() const;
};

struct SolverReport {
  double objective = 0;
  long long adaptive_rounds = 0;
  long long oracle_calls = 0;
  double feasibility_slack = 0;
  std::vector<double> lambda_trace;
  nlohmann::ordered_json config_echo;
  std::uint64_t seed = 0;
  double wall_time_ms = 0;

  Point x;                     // fractional output (empty for discrete runs)
  std::vector<int> chosen;     // discrete output (randomized variants)
  bool dry_run = false;
  bool aborted = false;
  std::string abort_reason;
};

nlohmann::ordered_json config_to_json(const SolveConfig& config);
nlohmann::ordered_json report_to_json(const SolverReport& report,
                                      bool include_wall_time = true);

// Dispatch the configured solver and assemble the report.
SolverReport run(const SolveConfig& config);

struct BaselineReport {
  double solver_objective = 0;
  std::optional<double> brute_force_value;
  double ratio = 1.0;  // solver / brute force; 1 by convention when both degenerate
  double floor = 0;    // 1 - 1/e - eps - tolerance
  bool pass = true;
  long long solver_rounds = 0;
  // Classic greedy comparison (cardinality only).
  std::optional<double> greedy_value;
  std::optional<long long> greedy_rounds;
};

// Runs the solver, then the reference oracles: exhaustive search for n <= 20
// and the sequential greedy for cardinality budgets. Asserts the
// (1 - 1/e - eps - tolerance) floor whenever brute force is available.
BaselineReport compare_baseline(const SolveConfig& config, double tolerance = 0.05);

nlohmann::ordered_json baseline_to_json(const BaselineReport& report);

}  // namespace submax
