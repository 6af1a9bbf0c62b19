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
#include <memory>
#include <vector>

#include "submax/packing_instance.hpp"
#include "submax/point.hpp"
#include "submax/set_function.hpp"

namespace submax {

// Disjoint parts covering {0..n-1}, part p allowing at most capacities[p]
// elements.
struct PartitionMatroid {
  std::vector<std::vector<int>> parts;
  std::vector<int> capacities;

  int n() const;
  void validate() const;  // exact partition, capacities >= 1
  bool feasible(const Subset& s) const;
};

struct RoundingOutcome {
  Subset chosen;
  bool feasible = false;  // against the declared constraint, exactly
  double value = 0;       // f(chosen)
  std::uint64_t seed = 0;
};

// Independent rounding: keep i with probability (1-eps) x_i. Meant for
// budgets k = Omega(log n / eps^2), where Chernoff keeps |S| <= k with high
// probability; feasibility is reported, never enforced by trimming.
RoundingOutcome round_cardinality(const SetFunction& f, const Point& x, int k,
                                  double eps, std::uint64_t seed);

// Capacity-1 partition rounding: per part one categorical draw picking i
// with probability exactly x_i (nothing with the leftover mass). Unbiased,
// E[f(S)] = F(x), and always feasible. Requires sum_{i in part} x_i <= 1.
RoundingOutcome round_simple_partition(const SetFunction& f, const Point& x,
                                       const PartitionMatroid& matroid,
                                       std::uint64_t seed);

// g over the lifted ground set (copy_to_base maps copies to originals);
// g(A) = f(projection of A). Solving and rounding over the capacity-1
// matroid and projecting back is feasible for the original matroid.
struct LiftedProblem {
  std::shared_ptr<const SetFunction> g;
  PartitionMatroid simple;
  std::vector<int> copy_to_base;

  Subset project(const Subset& lifted) const;
};

// Replace each part of capacity k_p by k_p capacity-1 copy-classes. Only
// parts with small capacity need lifting (large ones round independently);
// callers choose which, this lifts everything it is given.
LiftedProblem lift_to_simple_partition(std::shared_ptr<const SetFunction> f,
                                       const PartitionMatroid& matroid);

// Contention resolution for A x <= 1: sample R with probabilities
// c x_i / Delta (Delta = max column support), then per constraint scan R in
// increasing index order keeping items while the running load stays within
// budget. Output drops anything rejected by any constraint, so A 1_S <= 1
// always holds and S is a subset of R.
RoundingOutcome round_crs_packing(const SetFunction& f, const Point& x,
                                  const PackingInstance& instance, double c,
                                  std::uint64_t seed);

}  // namespace submax
