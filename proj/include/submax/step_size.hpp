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

#include "submax/multilinear.hpp"
#include "submax/trace.hpp"

namespace submax {

// Geometric candidate grid for the greedy step size. All candidates are
// evaluated in a single adaptive batch; the largest passing one wins, so the
// returned delta is a (1 + ratio-1)-approximate maximum.
struct StepGrid {
  double floor = 0;        // smallest candidate, (eps/n)^3 unless stated otherwise
  double cap = 0;          // largest admissible delta (budget / time / weight cap)
  double ratio = 0;        // grid ratio, > 1
  bool fallback_floor = false;  // if nothing passes, take floor instead of failing
};

struct StepResult {
  double delta = 0;
  StepBound bound = StepBound::kGradient;
  double value_at_base = 0;  // F(x), measured inside the batch
  double marginal = 0;       // F(x + delta dir | x) at the chosen delta
};

// Largest delta on the grid {floor * ratio^i} ∪ {cap} with
// F(x + delta * dir | x) >= target_rate * delta. Empty result means no
// candidate passed (and fallback_floor was off): the caller must shrink S or
// advance the threshold.
std::optional<StepResult> search_step(const MultilinearOracle& oracle, const Point& x,
                                      const Point& direction, double target_rate,
                                      const StepGrid& grid);

// Cardinality/knapsack-shaped wrapper: direction is the indicator of S and
// the grid is {(eps/n)^3 * (1+eps/2)^i} capped at budget_cap.
std::optional<double> find_step_size(const MultilinearOracle& oracle, const Point& x,
                                     const Subset& s, double target_rate,
                                     double budget_cap, double eps);

}  // namespace submax
