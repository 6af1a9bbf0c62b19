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
#include <vector>

#include "submax/multilinear.hpp"
#include "submax/subset.hpp"
#include "submax/trace.hpp"

namespace submax {

// Single knapsack <a, x> <= 1 with normalized costs in (0, 1].
struct KnapsackInstance {
  std::vector<double> costs;

  int n() const { return static_cast<int>(costs.size()); }

  // Items at least this expensive are handled integrally (one per adaptive
  // round); the constant 1/4 makes the cutoff eps^2 / (4 log n).
  double heavy_threshold(double eps) const;

  void validate() const;
  double cost_of(const Subset& s) const;
  double cost_of(const Point& x) const;
  double max_cost() const;
};

enum class KnapsackExit {
  kBudget,     // <a, x> reached 1
  kLambda,     // threshold schedule exhausted
  kHeavyExit,  // a heavy item cleared the filter but no longer fits
};

struct KnapsackParams {
  double eps = 0.1;
  std::optional<double> lambda0;
  std::uint64_t seed = 0;  // randomized variant
  long long max_rounds = 1'000'000;
  // Restrict the solver to a subset of elements (partial enumeration
  // residuals); empty means all.
  std::vector<char> active;

  void validate() const;
};

struct KnapsackResult {
  FractionalSolution solution;  // slack = <a, x>
  GreedyTrace trace;
  KnapsackExit exit_reason = KnapsackExit::kLambda;
};

// Bang-for-buck threshold greedy: S = {j : F'_j(x) >= (1-eps) lambda a_j},
// heavy items taken integrally, light items advanced by the largest uniform
// step with marginal rate near lambda per unit cost. Guarantees, with
// amax = max_j a_j: <a, x> <= 1; F(x) >= (1-O(eps))(1 - e^{-(1-amax)}) OPT;
// on heavy exit some single item j has F(x + e_j) >= (1-O(eps))(1-1/e) OPT;
// and x_j in {0,1} for every heavy j.
KnapsackResult greedy_knapsack(const Objective& obj, const KnapsackInstance& inst,
                               const KnapsackParams& params);

struct RandomizedKnapsackResult {
  Subset q;
  double value = 0;
  GreedyTrace trace;
  bool budget_violation = false;  // <a, Q> exceeded 1 (run aborted)
};

// Discrete variant: items that are heavy in cost or margin are decided
// deterministically; the rest advance by sampling R ~ delta S.
RandomizedKnapsackResult randomized_greedy_knapsack(const Objective& obj,
                                                    const KnapsackInstance& inst,
                                                    const KnapsackParams& params);

struct PartialEnumerationResult {
  FractionalSolution solution;  // best over all guesses, in the full space
  Subset guess;                 // the winning seed set
  GreedyTrace trace;            // rounds = max over branches, calls = total
  int branches = 0;
};

// Guess every seed set of up to guess_size elements (3 suffices to remove
// the max-cost dependence), contract it, solve the residual knapsack, and
// keep the best completion. Branches are independent, so depth does not
// grow; total work does by a factor of O(n^guess_size).
PartialEnumerationResult partial_enumeration(const Objective& obj,
                                             const KnapsackInstance& inst,
                                             double eps, int guess_size,
                                             const KnapsackParams& base_params = {});

}  // namespace submax
