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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "submax/generators.hpp"
#include "submax/report.hpp"

using namespace submax;
using nlohmann::ordered_json;

namespace {

SolveConfig modular_cardinality_config() {
  SolveConfig c;
  c.constraint = ConstraintKind::kCardinality;
  c.oracle_mode = "modular";
  c.instance.weights = std::vector<double>{3, 2, 1};
  c.k = 2;
  c.eps = 0.05;
  return c;
}

}  // namespace

TEST_CASE("cardinality fixture reproduces the known optimum") {
  SolverReport r = run(modular_cardinality_config());
  CHECK(r.objective == doctest::Approx(5.0).epsilon(1e-6));
  CHECK(r.adaptive_rounds > 0);
  CHECK(r.oracle_calls > 0);
}

TEST_CASE("dry run validates and echoes without running") {
  SolveConfig c = modular_cardinality_config();
  c.dry_run = true;
  SolverReport r = run(c);
  CHECK(r.dry_run);
  CHECK(r.objective == 0.0);
  CHECK(r.adaptive_rounds == 0);
  CHECK(r.config_echo.at("constraint") == "cardinality");
  CHECK(r.config_echo.at("k") == 2);
}

TEST_CASE("identical configs give byte-identical reports modulo wall time") {
  SolveConfig c = modular_cardinality_config();
  std::string a = report_to_json(run(c), /*include_wall_time=*/false).dump();
  std::string b = report_to_json(run(c), /*include_wall_time=*/false).dump();
  CHECK(a == b);

  // Randomized runs too: all randomness flows from the master seed.
  c.randomized = true;
  c.seed = 42;
  std::string ra = report_to_json(run(c), false).dump();
  std::string rb = report_to_json(run(c), false).dump();
  CHECK(ra == rb);
}

TEST_CASE("report schema carries the instrumented fields verbatim") {
  SolverReport r = run(modular_cardinality_config());
  ordered_json j = report_to_json(r);
  for (const char* field : {"objective", "adaptive_rounds", "oracle_calls",
                            "feasibility_slack", "lambda_trace", "config_echo", "seed",
                            "wall_time_ms"})
    CHECK(j.contains(field));
  // Field order is part of the golden contract.
  auto it = j.begin();
  CHECK(it.key() == "objective");
  ++it;
  CHECK(it.key() == "adaptive_rounds");
}

TEST_CASE("adaptive rounds count one flush per batched query group") {
  // Scripted walk of the oracle surface mirrors what solvers do per
  // iteration: one round for a gradient batch, one for a step-size batch,
  // one for a margins batch.
  Objective obj = make_coverage_objective(generate_random_coverage(10, 6, 0.4, 3));
  auto c0 = obj.counters();
  obj.F->grad_all(ones(6));
  CHECK(obj.counters().rounds - c0.rounds == 1);
  std::vector<Point> probes{zeros(6), ones(6)};
  obj.F->eval_F_batch(probes);
  CHECK(obj.counters().rounds - c0.rounds == 2);
  obj.F->marginals_from(zeros(6), probes);
  CHECK(obj.counters().rounds - c0.rounds == 3);
  // Calls counted per primitive query inside the batches.
  CHECK(obj.counters().calls - c0.calls == 6 + 2 + 3);
}

TEST_CASE("baseline comparison on the known fixture passes the floor") {
  BaselineReport b = compare_baseline(modular_cardinality_config());
  REQUIRE(b.brute_force_value.has_value());
  CHECK(*b.brute_force_value == doctest::Approx(5.0));
  CHECK(b.ratio >= 1.0 - 1e-9);
  CHECK(b.pass);
  REQUIRE(b.greedy_rounds.has_value());
  CHECK(*b.greedy_rounds == 2);  // classic greedy: one round per pick
  CHECK(*b.greedy_value == doctest::Approx(5.0));
}

TEST_CASE("degenerate baseline reports ratio one by convention") {
  SolveConfig c;
  c.constraint = ConstraintKind::kPacking;
  c.oracle_mode = "modular";
  c.instance.weights = std::vector<double>{1.0, 1.0};
  // Entries of one everywhere and a zero objective after pruning: make the
  // objective worthless instead, weights ~ 0 are invalid, so use a matrix
  // that forbids everything beyond the empty set and an objective that
  // values nothing... the clean degenerate case: packing with all columns
  // blocked pairwise and f counting nothing is impossible with positive
  // weights, so use the coverage objective with empty sets.
  c.oracle_mode = "coverage";
  c.instance.weights.reset();
  c.instance.coverage = CoverageSystem::make(2, {{}, {}});
  c.instance.packing = PackingInstance::make(1, 2, {{0, 0, 1.0}, {0, 1, 1.0}});
  c.eps = 0.1;
  BaselineReport b = compare_baseline(c);
  REQUIRE(b.brute_force_value.has_value());
  CHECK(*b.brute_force_value == 0.0);
  CHECK(b.ratio == 1.0);
}

TEST_CASE("baseline refuses exponential enumeration") {
  SolveConfig c;
  c.constraint = ConstraintKind::kCardinality;
  c.oracle_mode = "modular";
  c.instance.weights = std::vector<double>(21, 1.0);
  c.k = 2;
  CHECK_THROWS_AS(compare_baseline(c), input_error);
}

TEST_CASE("bundle parsing accepts plain and nested layouts") {
  ordered_json plain = {{"weights", {3, 2, 1}}};
  InstanceBundle b1 = bundle_from_json(plain);
  REQUIRE(b1.weights.has_value());
  CHECK(b1.weights->size() == 3);

  ordered_json nested;
  nested["objective"] = {{"universe_size", 3}, {"sets", {{0, 1}, {1, 2}}}};
  nested["packing"] = {{"m", 1}, {"n", 2}, {"entries", {{0, 0, 0.5}, {0, 1, 0.5}}}};
  nested["k"] = 1;
  InstanceBundle b2 = bundle_from_json(nested);
  REQUIRE(b2.coverage.has_value());
  REQUIRE(b2.packing.has_value());
  CHECK(b2.k == 1);
  CHECK(b2.packing->m == 1);

  ordered_json bad = {{"weights", "oops"}};
  CHECK_THROWS_AS(bundle_from_json(bad), input_error);
}

TEST_CASE("knapsack and packing dispatch through run()") {
  SolveConfig c;
  c.constraint = ConstraintKind::kKnapsack;
  c.oracle_mode = "coverage";
  c.instance.coverage = CoverageSystem::make(3, {{0, 1}, {1, 2}});
  c.instance.costs = std::vector<double>{0.5, 0.5};
  c.eps = 0.1;
  SolverReport kr = run(c);
  CHECK(kr.feasibility_slack <= 1.0 + 1e-9);
  CHECK(kr.objective > 0);

  c.constraint = ConstraintKind::kPacking;
  c.instance.costs.reset();
  c.instance.packing = PackingInstance::make(1, 2, {{0, 0, 0.5}, {0, 1, 0.5}});
  SolverReport pr = run(c);
  CHECK(pr.feasibility_slack <= 1.3 + 1e-9);
  CHECK(pr.objective > 0);

  c.lambda_race = true;
  SolverReport raced = run(c);
  CHECK(raced.objective >= pr.objective - 1e-9);
}

TEST_CASE("blackbox oracle mode runs end to end") {
  SolveConfig c;
  c.constraint = ConstraintKind::kCardinality;
  c.oracle_mode = "blackbox";
  c.instance.coverage = generate_random_coverage(10, 6, 0.4, 2);
  c.k = 2;
  c.eps = 0.2;
  c.eps_est = 0.3;  // keep the sample count small for a unit test
  SolverReport r = run(c);
  CHECK(r.objective > 0);
  CHECK(r.oracle_calls > r.adaptive_rounds);  // many samples per round
}
