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

#include <string>
#include <vector>

#include "submax/point.hpp"

namespace submax {

// What capped the step size of one inner iteration.
enum class StepBound {
  kGradient,   // the marginal-rate condition failed at the next candidate
  kBudget,     // budget / time cap reached
  kWeightCap,  // MWU weight-growth cap (packing only)
  kGridFloor,  // no candidate passed; took the grid floor (packing only)
  kHeavy,      // integral heavy-item step (knapsack only)
};

const char* step_bound_name(StepBound b);

// One inner iteration of a threshold-greedy solver, recorded after the set S
// was built and the step applied.
struct IterationRecord {
  int phase = 0;            // index into lambda_trace
  double lambda = 0;
  double delta = 0;
  StepBound bound = StepBound::kGradient;
  std::vector<int> s_indices;  // S at the start of the iteration
  double budget_used = 0;      // <1,x>, <a,x>, or t, per solver
  double objective = 0;        // F(x) (or f(Q)) after the step
  double potential = 0;        // <F'(x), x ∧ S> at iteration start (packing)
  double a_mass = 0;           // <a, S> at iteration start (knapsack)
  double log_weight_sum = 0;   // log <w, 1> after the step (packing)
};

struct GreedyTrace {
  std::vector<double> lambda_trace;       // threshold schedule, one per phase
  std::vector<IterationRecord> iterations;
  long long adaptive_rounds = 0;
  long long oracle_calls = 0;
  double wall_time_ms = 0;
  bool aborted = false;
  std::string abort_reason;
};

struct FractionalSolution {
  Point x;
  double objective = 0;
  // max_i (Ax)_i for packing, <a,x> for knapsack, <1,x>/k for cardinality.
  double feasibility_slack = 0;
};

}  // namespace submax
