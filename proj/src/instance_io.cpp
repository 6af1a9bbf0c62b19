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

#include "submax/instance_io.hpp"

#include <fstream>

namespace submax {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& context, const std::string& what) {
  throw input_error("instance parse error (" + context + "): " + what);
}

const json& require_field(const json& j, const char* field, const char* context) {
  if (!j.contains(field)) fail(context, std::string("missing field \"") + field + "\"");
  return j.at(field);
}

}  // namespace

CoverageSystem coverage_from_json(const json& j) {
  const json& r = require_field(j, "universe_size", "coverage");
  const json& sets = require_field(j, "sets", "coverage");
  if (!r.is_number_integer()) fail("coverage", "\"universe_size\" must be an integer");
  if (!sets.is_array()) fail("coverage", "\"sets\" must be an array of index arrays");
  std::vector<std::vector<int>> parsed;
  for (const json& s : sets) {
    if (!s.is_array()) fail("coverage", "every set must be an index array");
    std::vector<int> idx;
    for (const json& e : s) {
      if (!e.is_number_integer()) fail("coverage", "set entries must be integers");
      idx.push_back(e.get<int>());
    }
    parsed.push_back(std::move(idx));
  }
  return CoverageSystem::make(r.get<int>(), std::move(parsed));
}

json coverage_to_json(const CoverageSystem& sys) {
  return json{{"universe_size", sys.universe_size}, {"sets", sys.sets}};
}

std::vector<double> weights_from_json(const json& j) {
  const json& w = require_field(j, "weights", "modular");
  if (!w.is_array() || w.empty()) fail("modular", "\"weights\" must be a nonempty array");
  std::vector<double> out;
  for (const json& v : w) {
    if (!v.is_number()) fail("modular", "weights must be numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

json weights_to_json(const std::vector<double>& weights) {
  return json{{"weights", weights}};
}

PackingInstance packing_from_json(const json& j) {
  const json& m = require_field(j, "m", "packing");
  const json& n = require_field(j, "n", "packing");
  const json& entries = require_field(j, "entries", "packing");
  if (!m.is_number_integer() || !n.is_number_integer())
    fail("packing", "\"m\" and \"n\" must be integers");
  if (!entries.is_array()) fail("packing", "\"entries\" must be an array of [i, j, value]");
  std::vector<PackingTriplet> trips;
  for (const json& e : entries) {
    if (!e.is_array() || e.size() != 3) fail("packing", "entries must be [i, j, value] triplets");
    trips.push_back({e[0].get<int>(), e[1].get<int>(), e[2].get<double>()});
  }
  return PackingInstance::make(m.get<int>(), n.get<int>(), std::move(trips));
}

json packing_to_json(const PackingInstance& inst) {
  json entries = json::array();
  for (const auto& t : inst.entries) entries.push_back(json::array({t.row, t.col, t.value}));
  return json{{"m", inst.m}, {"n", inst.n}, {"entries", entries}};
}

std::vector<double> costs_from_json(const json& j) {
  const json& c = require_field(j, "costs", "knapsack");
  if (!c.is_array() || c.empty()) fail("knapsack", "\"costs\" must be a nonempty array");
  std::vector<double> out;
  for (const json& v : c) {
    if (!v.is_number()) fail("knapsack", "costs must be numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

json costs_to_json(const std::vector<double>& costs) { return json{{"costs", costs}}; }

PartitionMatroid partition_from_json(const json& j) {
  PartitionMatroid pm;
  const json& parts = require_field(j, "parts", "partition");
  const json& caps = require_field(j, "capacities", "partition");
  if (!parts.is_array() || !caps.is_array())
    fail("partition", "\"parts\" and \"capacities\" must be arrays");
  for (const json& p : parts) pm.parts.push_back(p.get<std::vector<int>>());
  for (const json& c : caps) pm.capacities.push_back(c.get<int>());
  pm.validate();
  return pm;
}

int InstanceBundle::objective_n() const {
  if (coverage) return coverage->n();
  if (weights) return static_cast<int>(weights->size());
  throw input_error("instance bundle has no objective (coverage or modular)");
}

InstanceBundle bundle_from_json(const json& j) {
  InstanceBundle b;
  const json& obj = j.contains("objective") ? j.at("objective") : j;
  if (obj.contains("universe_size") || obj.contains("sets"))
    b.coverage = coverage_from_json(obj);
  else if (obj.contains("weights"))
    b.weights = weights_from_json(obj);

  if (j.contains("entries") || (j.contains("m") && j.contains("n")))
    b.packing = packing_from_json(j);
  else if (j.contains("packing"))
    b.packing = packing_from_json(j.at("packing"));

  if (j.contains("costs")) b.costs = costs_from_json(j);
  if (j.contains("partition")) b.partition = partition_from_json(j.at("partition"));
  if (j.contains("k")) {
    if (!j.at("k").is_number_integer()) throw input_error("instance bundle: \"k\" must be an integer");
    b.k = j.at("k").get<int>();
  }
  return b;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open instance file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw input_error("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

InstanceBundle load_bundle(const std::string& path) {
  return bundle_from_json(load_json_file(path));
}

void save_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw input_error("cannot write file: " + path);
  out << j.dump(2) << "\n";
}

}  // namespace submax
