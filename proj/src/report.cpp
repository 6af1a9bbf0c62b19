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

#include "submax/report.hpp"

#include <chrono>
#include <cmath>

#include "submax/baseline.hpp"
#include "submax/brute_force.hpp"
#include "submax/cardinality.hpp"
#include "submax/knapsack.hpp"
#include "submax/packing.hpp"

namespace submax {

using nlohmann::ordered_json;

const char* constraint_name(ConstraintKind c) {
  switch (c) {
    case ConstraintKind::kCardinality: return "cardinality";
    case ConstraintKind::kKnapsack: return "knapsack";
    case ConstraintKind::kPacking: return "packing";
  }
  return "?";
}

ConstraintKind constraint_from_name(const std::string& name) {
  if (name == "cardinality") return ConstraintKind::kCardinality;
  if (name == "knapsack") return ConstraintKind::kKnapsack;
  if (name == "packing") return ConstraintKind::kPacking;
  throw input_error("unknown constraint: " + name);
}

int SolveConfig::resolved_k() const {
  if (k) return *k;
  if (instance.k) return *instance.k;
  throw input_error("cardinality run needs a budget k (flag --k or instance field)");
}

Objective SolveConfig::build_objective() const {
  if (oracle_mode == "coverage") {
    if (!instance.coverage) throw input_error("oracle mode coverage needs a coverage instance");
    return make_coverage_objective(*instance.coverage);
  }
  if (oracle_mode == "modular") {
    if (!instance.weights) throw input_error("oracle mode modular needs a modular instance");
    return make_modular_objective(*instance.weights);
  }
  if (oracle_mode == "blackbox") {
    // Same underlying f, but F and its gradient estimated by sampling only.
    std::shared_ptr<const SetFunction> f;
    if (instance.coverage)
      f = std::make_shared<CoverageFunction>(*instance.coverage);
    else if (instance.weights)
      f = std::make_shared<ModularSetFunction>(*instance.weights);
    else
      throw input_error("oracle mode blackbox needs an objective instance");
    EstimatorConfig est;
    est.eps = eps_est;
    est.p = static_cast<double>(f->n());
    est.d = std::max(2.0, static_cast<double>(f->n()));
    est.seed = est_seed;
    return make_blackbox_objective(std::move(f), est);
  }
  throw input_error("unknown oracle mode: " + oracle_mode);
}

ordered_json config_to_json(const SolveConfig& config) {
  ordered_json j;
  j["constraint"] = constraint_name(config.constraint);
  j["oracle"] = config.oracle_mode;
  j["eps"] = config.eps;
  j["seed"] = config.seed;
  j["randomized"] = config.randomized;
  j["enum"] = config.enum_size;
  j["strict"] = config.strict;
  j["lambda0"] = config.lambda0 ? ordered_json(*config.lambda0) : ordered_json(nullptr);
  j["max_rounds"] = config.max_rounds;
  j["lambda_race"] = config.lambda_race;
  j["eps_est"] = config.eps_est;
  j["est_seed"] = config.est_seed;
  ordered_json inst;
  if (config.instance.coverage) {
    inst["kind"] = "coverage";
    inst["n"] = config.instance.coverage->n();
    inst["universe_size"] = config.instance.coverage->universe_size;
  } else if (config.instance.weights) {
    inst["kind"] = "modular";
    inst["n"] = static_cast<int>(config.instance.weights->size());
  }
  if (config.instance.packing) {
    inst["m"] = config.instance.packing->m;
    inst["nnz"] = static_cast<int>(config.instance.packing->entries.size());
  }
  if (config.instance.costs) inst["costs_n"] = static_cast<int>(config.instance.costs->size());
  j["instance"] = inst;
  if (config.constraint == ConstraintKind::kCardinality) j["k"] = config.resolved_k();
  return j;
}

ordered_json report_to_json(const SolverReport& report, bool include_wall_time) {
  ordered_json j;
  j["objective"] = report.objective;
  j["adaptive_rounds"] = report.adaptive_rounds;
  j["oracle_calls"] = report.oracle_calls;
  j["feasibility_slack"] = report.feasibility_slack;
  j["lambda_trace"] = report.lambda_trace;
  j["config_echo"] = report.config_echo;
  j["seed"] = report.seed;
  if (include_wall_time) j["wall_time_ms"] = report.wall_time_ms;
  j["x"] = report.x;
  j["set"] = report.chosen;
  j["aborted"] = report.aborted;
  if (report.aborted) j["abort_reason"] = report.abort_reason;
  j["dry_run"] = report.dry_run;
  return j;
}

namespace {

void fill_from_trace(SolverReport& report, const GreedyTrace& trace) {
  report.adaptive_rounds = trace.adaptive_rounds;
  report.oracle_calls = trace.oracle_calls;
  report.lambda_trace = trace.lambda_trace;
  report.aborted = trace.aborted;
  report.abort_reason = trace.abort_reason;
}

}  // namespace

SolverReport run(const SolveConfig& config) {
  SolverReport report;
  report.config_echo = config_to_json(config);
  report.seed = config.seed;
  report.dry_run = config.dry_run;
  if (config.dry_run) return report;  // config validated by config_to_json

  Objective obj = config.build_objective();
  const auto t0 = std::chrono::steady_clock::now();

  switch (config.constraint) {
    case ConstraintKind::kCardinality: {
      CardinalityParams p;
      p.k = config.resolved_k();
      p.eps = config.eps;
      p.lambda0 = config.lambda0;
      p.seed = config.seed;
      p.max_rounds = config.max_rounds;
      if (config.randomized) {
        RandomizedGreedyResult r = randomized_parallel_greedy(obj, p);
        report.objective = r.value;
        report.chosen = r.q.indices();
        report.feasibility_slack = static_cast<double>(r.q.size()) / p.k;
        fill_from_trace(report, r.trace);
        if (r.cardinality_violation) report.aborted = true;
      } else {
        CardinalityResult r = parallel_greedy(obj, p);
        report.objective = r.solution.objective;
        report.x = r.solution.x;
        report.feasibility_slack = r.solution.feasibility_slack;
        fill_from_trace(report, r.trace);
      }
      break;
    }
    case ConstraintKind::kKnapsack: {
      if (!config.instance.costs) throw input_error("knapsack run needs a cost vector");
      KnapsackInstance inst{*config.instance.costs};
      if (config.enum_size >= 0) {
        KnapsackParams base;
        base.eps = config.eps;
        base.seed = config.seed;
        base.max_rounds = config.max_rounds;
        PartialEnumerationResult r =
            partial_enumeration(obj, inst, config.eps, config.enum_size, base);
        report.objective = r.solution.objective;
        report.x = r.solution.x;
        report.feasibility_slack = r.solution.feasibility_slack;
        fill_from_trace(report, r.trace);
      } else {
        KnapsackParams p;
        p.eps = config.eps;
        p.lambda0 = config.lambda0;
        p.seed = config.seed;
        p.max_rounds = config.max_rounds;
        if (config.randomized) {
          RandomizedKnapsackResult r = randomized_greedy_knapsack(obj, inst, p);
          report.objective = r.value;
          report.chosen = r.q.indices();
          report.feasibility_slack = inst.cost_of(r.q);
          fill_from_trace(report, r.trace);
          if (r.budget_violation) report.aborted = true;
        } else {
          KnapsackResult r = greedy_knapsack(obj, inst, p);
          report.objective = r.solution.objective;
          report.x = r.solution.x;
          report.feasibility_slack = r.solution.feasibility_slack;
          fill_from_trace(report, r.trace);
        }
      }
      break;
    }
    case ConstraintKind::kPacking: {
      if (!config.instance.packing) throw input_error("packing run needs a constraint matrix");
      MwuParams p;
      p.eps = config.eps;
      p.lambda0 = config.lambda0;
      p.seed = config.seed;
      p.max_rounds = config.max_rounds;
      p.strict = config.strict;
      if (config.lambda_race) {
        // Race geometric opt estimates; branches are independent, so depth is
        // the deepest branch while calls accumulate.
        std::vector<double> schedule = estimate_opt_schedule(obj, true);
        std::optional<MwuResult> best;
        long long max_branch_rounds = 0;
        for (double cand : schedule) {
          CounterSnapshot before = obj.counters();
          MwuParams pc = p;
          pc.lambda0 = cand;
          MwuResult r = mwu_solve(obj, *config.instance.packing, pc);
          max_branch_rounds =
              std::max(max_branch_rounds, obj.counters().rounds - before.rounds);
          if (!best || r.solution.objective > best->solution.objective)
            best = std::move(r);
        }
        best->trace.adaptive_rounds = max_branch_rounds;
        best->trace.oracle_calls = obj.counters().calls;
        report.objective = best->solution.objective;
        report.x = best->solution.x;
        report.feasibility_slack = best->solution.feasibility_slack;
        fill_from_trace(report, best->trace);
      } else {
        MwuResult r = mwu_solve(obj, *config.instance.packing, p);
        report.objective = r.solution.objective;
        report.x = r.solution.x;
        report.feasibility_slack = r.solution.feasibility_slack;
        fill_from_trace(report, r.trace);
      }
      break;
    }
  }

  const auto t1 = std::chrono::steady_clock::now();
  report.wall_time_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return report;
}

BaselineReport compare_baseline(const SolveConfig& config, double tolerance) {
  BaselineReport out;
  SolverReport solved = run(config);
  out.solver_objective = solved.objective;
  out.solver_rounds = solved.adaptive_rounds;
  out.floor = 1.0 - std::exp(-1.0) - config.eps - tolerance;

  Objective obj = config.build_objective();
  const int n = obj.n();
  if (n > 20)
    throw input_error("compare_baseline: brute force needs n <= 20");

  std::function<bool(const Subset&)> feasible;
  switch (config.constraint) {
    case ConstraintKind::kCardinality: {
      int k = config.resolved_k();
      feasible = [k](const Subset& s) { return s.size() <= k; };
      break;
    }
    case ConstraintKind::kKnapsack: {
      if (!config.instance.costs) throw input_error("knapsack baseline needs costs");
      KnapsackInstance inst{*config.instance.costs};
      feasible = [inst](const Subset& s) { return inst.cost_of(s) <= 1.0 + 1e-12; };
      break;
    }
    case ConstraintKind::kPacking: {
      if (!config.instance.packing) throw input_error("packing baseline needs the matrix");
      PackingInstance inst = *config.instance.packing;
      feasible = [inst](const Subset& s) {
        return inst.max_load(indicator(s)) <= 1.0 + 1e-12;
      };
      break;
    }
  }

  BruteForceResult bf = brute_force_opt(*obj.f, feasible);
  out.brute_force_value = bf.value;
  // Empty or worthless feasible region: ratio 1 by convention.
  out.ratio = bf.value > 0 ? out.solver_objective / bf.value : 1.0;
  out.pass = out.ratio >= out.floor;

  if (config.constraint == ConstraintKind::kCardinality) {
    Objective greedy_obj = config.build_objective();
    SequentialGreedyResult g = sequential_greedy_cardinality(greedy_obj, config.resolved_k());
    out.greedy_value = g.value;
    out.greedy_rounds = g.adaptive_rounds;
  }
  return out;
}

ordered_json baseline_to_json(const BaselineReport& r) {
  ordered_json j;
  j["solver_objective"] = r.solver_objective;
  j["brute_force"] = r.brute_force_value ? ordered_json(*r.brute_force_value) : ordered_json(nullptr);
  j["ratio"] = r.ratio;
  j["floor"] = r.floor;
  j["pass"] = r.pass;
  j["solver_rounds"] = r.solver_rounds;
  if (r.greedy_value) j["sequential_greedy_value"] = *r.greedy_value;
  if (r.greedy_rounds) j["sequential_greedy_rounds"] = *r.greedy_rounds;
  return j;
}

}  // namespace submax
