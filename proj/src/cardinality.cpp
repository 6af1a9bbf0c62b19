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

#include "submax/cardinality.hpp"

#include <algorithm>
#include <cmath>

#include "submax/rng.hpp"
#include "submax/step_size.hpp"

namespace submax {

namespace {

constexpr double kSaturated = 1.0 - 1e-12;
constexpr double kFilterTol = 1.0 - 1e-12;  // >= comparisons at the filter boundary
constexpr double kEulerInv = 0.36787944117144233;

struct SingletonStats {
  std::vector<double> values;
  double max = 0;
  double sum = 0;
};

SingletonStats singleton_values(const MultilinearOracle& oracle) {
  SingletonStats s;
  s.values = oracle.grad_all(zeros(oracle.n()));  // F'_j(0) = f({j}); one batch
  for (double v : s.values) {
    s.max = std::max(s.max, v);
    s.sum += v;
  }
  return s;
}

double resolve_lambda0(const std::optional<double>& given, const SingletonStats& s) {
  if (!given) return s.sum;
  if (*given < s.max * kFilterTol)
    throw input_error("lambda0 is below max_j f({j}), so it cannot upper-bound opt");
  return *given;
}

void guard_rounds(const Objective& obj, const CounterSnapshot& start, long long max_rounds) {
  if (obj.counters().rounds - start.rounds > max_rounds)
    throw guard_abort("adaptive round guard exceeded; check eps and instance scale");
}

}  // namespace

void CardinalityParams::validate(int n) const {
  if (k < 1) throw input_error("CardinalityParams: k must be >= 1");
  (void)n;
  if (!(eps > 0.0 && eps <= 0.3))
    throw input_error("CardinalityParams: eps must lie in (0, 0.3]");
  if (max_rounds < 1) throw input_error("CardinalityParams: max_rounds must be positive");
}

CardinalityResult parallel_greedy(const Objective& obj, const CardinalityParams& params) {
  const int n = obj.n();
  params.validate(n);
  const double eps = params.eps;
  const double k = static_cast<double>(params.k);
  const CounterSnapshot start = obj.counters();

  GreedyTrace trace;
  Point x = zeros(n);
  double objective = 0;

  SingletonStats singles = singleton_values(*obj.F);
  double lambda = resolve_lambda0(params.lambda0, singles);
  const double lambda_min = singles.max * kEulerInv;
  trace.lambda_trace.push_back(lambda);

  if (singles.max <= 0.0) {  // f identically zero on singletons
    trace.adaptive_rounds = obj.counters().rounds - start.rounds;
    trace.oracle_calls = obj.counters().calls - start.calls;
    return {{x, 0.0, 0.0}, trace};
  }

  const double budget_tol = k * 1e-12;
  int phase = 0;
  while (lambda >= lambda_min * kFilterTol && coord_sum(x) < k - budget_tol) {
    guard_rounds(obj, start, params.max_rounds);

    std::vector<double> grads = obj.F->grad_all(x);
    auto build_s = [&]() {
      Subset s(n);
      const double threshold = (1.0 - eps) * lambda / k;
      for (int j = 0; j < n; ++j)
        if (x[static_cast<std::size_t>(j)] < kSaturated &&
            grads[static_cast<std::size_t>(j)] >= threshold * kFilterTol)
          s.add(j);
      return s;
    };
    Subset s = build_s();

    bool force_phase_advance = false;
    while (!s.empty() && coord_sum(x) < k - budget_tol) {
      guard_rounds(obj, start, params.max_rounds);
      const int s_size = s.size();
      const double target = (1.0 - eps) * (1.0 - eps) * lambda * s_size / k;
      const double cap = (k - coord_sum(x)) / s_size;

      StepGrid grid;
      grid.floor = std::min(std::pow(eps / n, 3.0), cap);
      grid.cap = cap;
      grid.ratio = 1.0 + eps / 2.0;
      auto step = search_step(*obj.F, x, indicator(s), target, grid);
      if (!step) {
        // No candidate cleared the rate condition; advance the threshold.
        force_phase_advance = true;
        break;
      }

      IterationRecord rec;
      rec.phase = phase;
      rec.lambda = lambda;
      rec.delta = step->delta;
      rec.bound = step->bound;
      rec.s_indices = s.indices();

      x = clamped01(add_on(x, s, step->delta));
      rec.budget_used = coord_sum(x);
      objective = step->value_at_base + step->marginal;
      rec.objective = objective;
      trace.iterations.push_back(std::move(rec));

      grads = obj.F->grad_all(x);
      s = build_s();
    }

    if (coord_sum(x) >= k - budget_tol) break;
    lambda *= (1.0 - eps);
    ++phase;
    trace.lambda_trace.push_back(lambda);
    (void)force_phase_advance;
  }

  double value = obj.F->eval_F(x);
  trace.adaptive_rounds = obj.counters().rounds - start.rounds;
  trace.oracle_calls = obj.counters().calls - start.calls;
  return {{x, value, coord_sum(x) / k}, trace};
}

RandomizedGreedyResult randomized_parallel_greedy(const Objective& obj,
                                                  const CardinalityParams& params) {
  const int n = obj.n();
  params.validate(n);
  const double eps = params.eps;
  const double k = static_cast<double>(params.k);
  const double t_cap = (1.0 - 2.0 * eps) * k;
  const CounterSnapshot start = obj.counters();

  GreedyTrace trace;
  RandomizedGreedyResult result;
  result.q = Subset(n);

  // Margins at the current Q, one batch: {f(Q)} then {f(Q + j)}.
  double f_q = 0;
  std::vector<double> margins(static_cast<std::size_t>(n), 0.0);
  auto refresh_margins = [&]() {
    f_q = obj.f->value(result.q);
    for (int j = 0; j < n; ++j) {
      if (result.q.contains(j)) {
        margins[static_cast<std::size_t>(j)] = 0.0;
        continue;
      }
      Subset with = result.q;
      with.add(j);
      margins[static_cast<std::size_t>(j)] = obj.f->value(with) - f_q;
    }
    obj.f->flush_round();
  };

  refresh_margins();
  SingletonStats singles;
  singles.values = margins;
  for (double v : margins) {
    singles.max = std::max(singles.max, v);
    singles.sum += v;
  }
  double lambda = resolve_lambda0(params.lambda0, singles);
  const double lambda_min = singles.max * kEulerInv;
  trace.lambda_trace.push_back(lambda);
  if (singles.max <= 0.0) {
    trace.adaptive_rounds = obj.counters().rounds - start.rounds;
    trace.oracle_calls = obj.counters().calls - start.calls;
    result.value = 0;
    result.trace = std::move(trace);
    return result;
  }

  double t = 0;
  std::uint64_t sample_nonce = 0;
  const std::uint64_t sample_seed = derive_seed(params.seed, "rpg/sample");
  int phase = 0;

  auto build_s = [&]() {
    Subset s(n);
    const double threshold = (1.0 - eps) * lambda / k;
    for (int j = 0; j < n; ++j)
      if (!result.q.contains(j) &&
          margins[static_cast<std::size_t>(j)] >= threshold * kFilterTol)
        s.add(j);
    return s;
  };

  const double t_tol = k * 1e-12;
  while (t <= t_cap - t_tol && lambda >= lambda_min * kFilterTol) {
    guard_rounds(obj, start, params.max_rounds);
    Subset s = build_s();

    bool force_phase_advance = false;
    while (!s.empty() && t <= t_cap - t_tol) {
      guard_rounds(obj, start, params.max_rounds);
      const int s_size = s.size();
      const double target = (1.0 - eps) * (1.0 - eps) * lambda * s_size / k;
      // delta is an inclusion probability, additionally capped by the
      // expected-cardinality budget t + delta |S| <= (1 - 2 eps) k.
      const double cap = std::min(1.0, (t_cap - t) / s_size);

      StepGrid grid;
      grid.floor = std::min(std::pow(eps / n, 3.0), cap);
      grid.cap = cap;
      grid.ratio = 1.0 + eps / 2.0;
      auto step = search_step(*obj.F, indicator(result.q), indicator(s), target, grid);
      if (!step) {
        force_phase_advance = true;
        break;
      }

      IterationRecord rec;
      rec.phase = phase;
      rec.lambda = lambda;
      rec.delta = step->delta;
      rec.bound = step->bound;
      rec.s_indices = s.indices();

      // R ~ delta S: each member independently with probability delta.
      for (int j : s.indices()) {
        double u = to_unit(mix64(sample_seed, sample_nonce,
                                 static_cast<std::uint64_t>(j)));
        if (u < step->delta) result.q.add(j);
      }
      ++sample_nonce;
      t += step->delta * s_size;
      rec.budget_used = t;

      if (result.q.size() > params.k) {
        result.cardinality_violation = true;
        trace.aborted = true;
        trace.abort_reason = "cardinality bound exceeded by sampled set";
        refresh_margins();
        rec.objective = f_q;
        trace.iterations.push_back(std::move(rec));
        result.value = f_q;
        trace.adaptive_rounds = obj.counters().rounds - start.rounds;
        trace.oracle_calls = obj.counters().calls - start.calls;
        result.trace = std::move(trace);
        return result;
      }

      refresh_margins();
      rec.objective = f_q;
      trace.iterations.push_back(std::move(rec));
      s = build_s();
    }

    if (t > t_cap - t_tol) break;
    lambda *= (1.0 - eps);
    ++phase;
    trace.lambda_trace.push_back(lambda);
    (void)force_phase_advance;
  }

  result.value = f_q;
  trace.adaptive_rounds = obj.counters().rounds - start.rounds;
  trace.oracle_calls = obj.counters().calls - start.calls;
  result.trace = std::move(trace);
  return result;
}

}  // namespace submax
