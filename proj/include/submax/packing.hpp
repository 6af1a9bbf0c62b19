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
#include "submax/packing_instance.hpp"
#include "submax/trace.hpp"

namespace submax {

// Per-constraint multiplicative weights w_i = exp(eta (Ax)_i), kept in log
// domain: exponents reach (log m / eps)(1 + 3 eps), which overflows doubles
// for small eps and large m.
class WeightState {
 public:
  WeightState(int m, double eta) : eta_(eta), load_(static_cast<std::size_t>(m), 0.0) {}

  static WeightState from_load(double eta, std::vector<double> load) {
    WeightState w(static_cast<int>(load.size()), eta);
    w.load_ = std::move(load);
    return w;
  }

  int m() const { return static_cast<int>(load_.size()); }
  double eta() const { return eta_; }

  double load(int i) const { return load_[static_cast<std::size_t>(i)]; }
  const std::vector<double>& loads() const { return load_; }

  // log w_i = eta * (Ax)_i.
  double log_weight(int i) const { return eta_ * load_[static_cast<std::size_t>(i)]; }

  // log <w, 1> by log-sum-exp.
  double log_weight_sum() const;

  // Advance the cached loads by A * x_delta.
  void apply_load_delta(const std::vector<double>& load_delta);

 private:
  double eta_;
  std::vector<double> load_;  // (Ax)_i cache
};

// Functional form of the weight update: state after x grows by x_delta.
WeightState weight_refresh(const WeightState& state, const PackingInstance& a,
                           const Point& x_delta);

struct MwuParams {
  double eps = 0.1;               // (0, 0.3], and eps >= n^-2
  std::optional<double> lambda0;  // default sum_j f({j}) over surviving elements
  std::uint64_t seed = 0;         // only used by sampling oracles
  long long max_rounds = 1'000'000;
  // Rescale the output to hard feasibility A x <= 1 (costs a (1 - O(eps))
  // factor in value via monotone concavity).
  bool strict = false;

  void validate(int n) const;
};

struct PreprocessResult {
  PackingInstance instance;     // entries below eps/n rounded down to 0
  std::vector<char> active;     // elements that survive the value filter
  Point x_init;                 // maximal x with A_ij x_j <= eps/n, 1 on zero columns
  std::vector<double> singleton_values;
  double singleton_max = 0;     // over active elements
  double singleton_sum = 0;     // over active elements
};

// Drops elements with f({j}) < (eps/n) max_j f({j}), zeroes matrix entries
// below eps/n, and produces the starting point. One adaptive round.
PreprocessResult preprocess(const PackingInstance& instance, const Objective& obj,
                            double eps);

struct MwuResult {
  FractionalSolution solution;  // slack = max_i (A x)_i against the given A
  GreedyTrace trace;
};

// MWU-guided continuous greedy for max F(x) s.t. A x <= 1. Output satisfies
// A x <= (1 + 3 eps) 1 and F(x) >= (1 - O(eps)) (1 - 1/e) OPT; with strict
// mode the output is rescaled to A x <= 1.
MwuResult mwu_solve(const Objective& obj, const PackingInstance& instance,
                    const MwuParams& params);

// Threshold schedule for the initial upper bound on opt: by default the
// single safe bound sum_j f({j}); in race mode O(log n) geometric candidates
// between max_j f({j}) and the sum, to be run in parallel and the best
// solution kept.
std::vector<double> estimate_opt_schedule(const Objective& obj, bool race_mode);

}  // namespace submax
