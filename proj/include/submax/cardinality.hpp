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

#include "submax/multilinear.hpp"
#include "submax/subset.hpp"
#include "submax/trace.hpp"

namespace submax {

struct CardinalityParams {
  int k = 1;
  double eps = 0.1;                // accuracy, (0, 0.3]
  std::optional<double> lambda0;   // threshold start; default sum_j f({j})
  std::uint64_t seed = 0;          // randomized variant only
  long long max_rounds = 1'000'000;

  void validate(int n) const;
};

struct CardinalityResult {
  FractionalSolution solution;
  GreedyTrace trace;
};

// Threshold continuous greedy for max F(x) s.t. <1, x> <= k. Maintains a
// descending threshold lambda; each phase uniformly raises every coordinate
// whose gradient clears (1-eps) lambda / k by the largest step that keeps the
// average marginal rate near lambda. Output satisfies <1, x> <= k and
// F(x) >= (1 - O(eps)) (1 - 1/e) OPT.
CardinalityResult parallel_greedy(const Objective& obj, const CardinalityParams& params);

struct RandomizedGreedyResult {
  Subset q;
  double value = 0;
  GreedyTrace trace;
  // |Q| exceeded k (probability <= 1/poly(n)); the run stops immediately and
  // is reported as a failure sample rather than trimming Q.
  bool cardinality_violation = false;
};

// Discrete variant driven by margins f_Q(j); fractional steps are realized
// by sampling R ~ delta S. Budgets the expected cardinality t at (1-2 eps) k.
RandomizedGreedyResult randomized_parallel_greedy(const Objective& obj,
                                                  const CardinalityParams& params);

}  // namespace submax
