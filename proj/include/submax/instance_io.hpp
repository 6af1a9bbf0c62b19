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

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "submax/coverage.hpp"
#include "submax/packing_instance.hpp"
#include "submax/rounding.hpp"

namespace submax {

// File schemas (field names are fixed):
//   coverage instance:  {"universe_size": r, "sets": [[indices]...]}
//   modular instance:   {"weights": [c_0 .. c_{n-1}]}
//   packing instance:   {"m": m, "n": n, "entries": [[i, j, value]...]}
//   knapsack instance:  {"costs": [a_0 .. a_{n-1}]}
// A bundle file nests an objective with constraint data:
//   {"objective": <coverage or modular>, "packing": {...} | "costs": [...] |
//    "k": K, "partition": {"parts": [[...]...], "capacities": [...]}}

CoverageSystem coverage_from_json(const nlohmann::json& j);
nlohmann::json coverage_to_json(const CoverageSystem& sys);

std::vector<double> weights_from_json(const nlohmann::json& j);
nlohmann::json weights_to_json(const std::vector<double>& weights);

PackingInstance packing_from_json(const nlohmann::json& j);
nlohmann::json packing_to_json(const PackingInstance& inst);

std::vector<double> costs_from_json(const nlohmann::json& j);
nlohmann::json costs_to_json(const std::vector<double>& costs);

PartitionMatroid partition_from_json(const nlohmann::json& j);

// Everything a run might need, parsed from one file.
struct InstanceBundle {
  std::optional<CoverageSystem> coverage;
  std::optional<std::vector<double>> weights;
  std::optional<PackingInstance> packing;
  std::optional<std::vector<double>> costs;
  std::optional<PartitionMatroid> partition;
  std::optional<int> k;

  int objective_n() const;
  bool has_objective() const { return coverage.has_value() || weights.has_value(); }
};

InstanceBundle bundle_from_json(const nlohmann::json& j);
InstanceBundle load_bundle(const std::string& path);

nlohmann::json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace submax
