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

#include "submax/step_size.hpp"

#include <cmath>

namespace submax {

namespace {

// Marginal-rate comparisons tolerate relative float noise; the exact-backend
// fixtures hit the pass/fail boundary with equalities.
constexpr double kRelTol = 1e-9;

bool passes(double marginal, double target_rate, double delta) {
  return marginal >= target_rate * delta * (1.0 - kRelTol) - 1e-15;
}

}  // namespace

std::optional<StepResult> search_step(const MultilinearOracle& oracle, const Point& x,
                                      const Point& direction, double target_rate,
                                      const StepGrid& grid) {
  if (!(grid.ratio > 1.0)) throw input_error("search_step: grid ratio must exceed 1");
  if (!(grid.floor > 0.0)) throw input_error("search_step: grid floor must be positive");
  if (!(grid.cap > 0.0)) throw input_error("search_step: cap must be positive");
  if (!(target_rate > 0.0)) throw input_error("search_step: target rate must be positive");

  std::vector<double> candidates;
  for (double d = grid.floor; d < grid.cap; d *= grid.ratio) candidates.push_back(d);
  candidates.push_back(grid.cap);

  std::vector<Point> tops;
  tops.reserve(candidates.size());
  for (double d : candidates) {
    Point t(x);
    for (std::size_t i = 0; i < t.size(); ++i) t[i] += d * direction[i];
    tops.push_back(std::move(t));
  }
  // Evaluate every candidate plus the base point in one batch.
  std::vector<Point> batch;
  batch.reserve(tops.size() + 1);
  batch.push_back(x);
  for (Point& t : tops) batch.push_back(std::move(t));
  std::vector<double> values = oracle.eval_F_batch(batch);
  const double at_base = values[0];

  // The average rate F(x + dD | x) / d is non-increasing in d (monotone
  // concavity), so the passing candidates form a prefix; take the last one.
  int best = -1;
  for (int i = static_cast<int>(candidates.size()) - 1; i >= 0; --i) {
    double marginal = values[static_cast<std::size_t>(i) + 1] - at_base;
    if (passes(marginal, target_rate, candidates[static_cast<std::size_t>(i)])) {
      best = i;
      break;
    }
  }
  if (best < 0) {
    if (grid.fallback_floor)
      return StepResult{candidates.front(), StepBound::kGridFloor, at_base,
                        values[1] - at_base};
    return std::nullopt;
  }
  StepResult r;
  r.delta = candidates[static_cast<std::size_t>(best)];
  r.bound = best == static_cast<int>(candidates.size()) - 1 ? StepBound::kBudget
                                                            : StepBound::kGradient;
  r.value_at_base = at_base;
  r.marginal = values[static_cast<std::size_t>(best) + 1] - at_base;
  return r;
}

std::optional<double> find_step_size(const MultilinearOracle& oracle, const Point& x,
                                     const Subset& s, double target_rate,
                                     double budget_cap, double eps) {
  if (s.empty()) throw input_error("find_step_size: S must be nonempty");
  if (!(budget_cap > 0.0)) throw input_error("find_step_size: budget cap must be positive");
  const double n = static_cast<double>(oracle.n());
  StepGrid grid;
  grid.floor = std::pow(eps / n, 3.0);
  grid.cap = budget_cap;
  grid.ratio = 1.0 + eps / 2.0;
  if (grid.floor > grid.cap) grid.floor = grid.cap;
  auto r = search_step(oracle, x, indicator(s), target_rate, grid);
  if (!r) return std::nullopt;
  return r->delta;
}

}  // namespace submax
