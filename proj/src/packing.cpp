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

#include "submax/packing.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <string>

#include "submax/step_size.hpp"

namespace submax {

namespace {

constexpr double kSaturated = 1.0 - 1e-12;
constexpr double kFilterTol = 1.0 - 1e-12;
constexpr double kEulerInv = 0.36787944117144233;

double log_sum_exp(const std::vector<double>& v) {
  double mx = v[0];
  for (double a : v) mx = std::max(mx, a);
  double s = 0;
  for (double a : v) s += std::exp(a - mx);
  return mx + std::log(s);
}

}  // namespace

double WeightState::log_weight_sum() const {
  std::vector<double> lw(load_.size());
  for (std::size_t i = 0; i < load_.size(); ++i) lw[i] = eta_ * load_[i];
  return log_sum_exp(lw);
}

void WeightState::apply_load_delta(const std::vector<double>& load_delta) {
  if (load_delta.size() != load_.size())
    throw input_error("WeightState: load delta dimension mismatch");
  for (std::size_t i = 0; i < load_.size(); ++i) {
    if (load_delta[i] < 0) throw input_error("WeightState: loads must not decrease");
    load_[i] += load_delta[i];
  }
}

WeightState weight_refresh(const WeightState& state, const PackingInstance& a,
                           const Point& x_delta) {
  for (double v : x_delta)
    if (v < 0) throw input_error("weight_refresh: x_delta must be nonnegative");
  WeightState next = state;
  next.apply_load_delta(a.load(x_delta));
  return next;
}

void MwuParams::validate(int n) const {
  if (!(eps > 0.0 && eps <= 0.3)) throw input_error("MwuParams: eps must lie in (0, 0.3]");
  double nn = static_cast<double>(n);
  if (eps < 1.0 / (nn * nn))
    throw input_error("MwuParams: eps below n^-2; use a sequential solver at that accuracy");
  if (max_rounds < 1) throw input_error("MwuParams: max_rounds must be positive");
}

PreprocessResult preprocess(const PackingInstance& instance, const Objective& obj,
                            double eps) {
  const int n = instance.n;
  if (obj.n() != n) throw input_error("preprocess: objective and instance sizes differ");
  if (!(eps > 0.0 && eps <= 0.3)) throw input_error("preprocess: eps must lie in (0, 0.3]");

  PreprocessResult out;
  out.singleton_values = obj.F->grad_all(zeros(n));  // f({j}); one batch

  double overall_max = 0;
  for (double v : out.singleton_values) overall_max = std::max(overall_max, v);

  out.active.assign(static_cast<std::size_t>(n), 0);
  const double value_floor = (eps / n) * overall_max;
  for (int j = 0; j < n; ++j) {
    double v = out.singleton_values[static_cast<std::size_t>(j)];
    if (v >= value_floor && v > 0.0) {
      out.active[static_cast<std::size_t>(j)] = 1;
      out.singleton_max = std::max(out.singleton_max, v);
      out.singleton_sum += v;
    }
  }

  // Round entries below eps/n down to zero.
  const double entry_floor = eps / n;
  std::vector<PackingTriplet> kept;
  kept.reserve(instance.entries.size());
  for (const auto& t : instance.entries)
    if (t.value >= entry_floor) kept.push_back(t);
  out.instance = PackingInstance::make(instance.m, n, std::move(kept), /*pruned=*/true);

  out.x_init = zeros(n);
  for (int j = 0; j < n; ++j) {
    if (!out.active[static_cast<std::size_t>(j)]) continue;
    double cmax = out.instance.column_max(j);
    out.x_init[static_cast<std::size_t>(j)] =
        cmax == 0.0 ? 1.0 : std::min(1.0, entry_floor / cmax);
  }
  return out;
}

std::vector<double> estimate_opt_schedule(const Objective& obj, bool race_mode) {
  std::vector<double> singles = obj.F->grad_all(zeros(obj.n()));
  double lo = 0, sum = 0;
  for (double v : singles) {
    lo = std::max(lo, v);
    sum += v;
  }
  if (!race_mode || lo <= 0.0 || sum <= lo) return {sum};
  std::vector<double> out;
  for (double c = lo; c < sum; c *= 2.0) out.push_back(c);
  out.push_back(sum);
  return out;
}

MwuResult mwu_solve(const Objective& obj, const PackingInstance& instance,
                    const MwuParams& params) {
  const int n = instance.n;
  const int m = instance.m;
  params.validate(n);
  const double eps = params.eps;
  const CounterSnapshot start = obj.counters();

  GreedyTrace trace;
  PreprocessResult pre = preprocess(instance, obj, eps);
  const PackingInstance& a = pre.instance;

  auto finish = [&](Point x_raw) -> MwuResult {
    Point x = clamped01(x_raw);
    double slack = instance.max_load(x);  // against the caller's matrix
    if (params.strict && slack > 1.0) {
      for (double& v : x) v /= slack;
      slack = instance.max_load(x);
    }
    double value = obj.F->eval_F(x);
    trace.adaptive_rounds = obj.counters().rounds - start.rounds;
    trace.oracle_calls = obj.counters().calls - start.calls;
    return {{x, value, slack}, trace};
  };

  if (pre.singleton_max <= 0.0) return finish(zeros(n));

  double lambda = params.lambda0.value_or(pre.singleton_sum);
  if (lambda < pre.singleton_max * kFilterTol)
    throw input_error("lambda0 is below max_j f({j}), so it cannot upper-bound opt");
  const double lambda_min = pre.singleton_max * kEulerInv;
  trace.lambda_trace.push_back(lambda);

  // log m degenerates at m = 1 (zero weight growth, division by zero in the
  // weight cap); treat m as max(m, 2) for the weight rule.
  const double log_m = std::log(static_cast<double>(std::max(m, 2)));
  const double eta = log_m / eps;

  Point x = pre.x_init;  // raw trajectory; coordinates may drift slightly past 1
  WeightState weights = WeightState::from_load(eta, a.load(x));
  double t = 0;

  auto guard = [&]() {
    if (obj.counters().rounds - start.rounds > params.max_rounds)
      throw guard_abort("adaptive round guard exceeded; check eps and instance scale");
  };

  const double t_tol = 1e-12;
  int phase = 0;
  while (t < 1.0 - t_tol && lambda >= lambda_min * kFilterTol) {
    guard();
    const double log_w_phase = weights.log_weight_sum();

    std::vector<double> grads = obj.F->grad_all(x);

    // Weighted column loads <A^T w>_j / W with the phase-start W; computed
    // from normalized weights so nothing overflows.
    auto normalized_column_load = [&](int j) {
      double s = 0;
      for (const auto& [i, v] : a.cols[static_cast<std::size_t>(j)])
        s += v * std::exp(weights.log_weight(i) - log_w_phase);
      return s;
    };

    auto build_s = [&]() {
      Subset s(n);
      const double ratio_threshold = std::pow(1.0 - eps, 3.0) * lambda;
      const double grad_threshold = eps * (1.0 - eps) * lambda / n;
      for (int j = 0; j < n; ++j) {
        if (!pre.active[static_cast<std::size_t>(j)]) continue;
        if (x[static_cast<std::size_t>(j)] >= kSaturated) continue;
        double g = grads[static_cast<std::size_t>(j)];
        if (g < grad_threshold * kFilterTol) continue;
        if (g >= ratio_threshold * normalized_column_load(j) * kFilterTol) s.add(j);
      }
      return s;
    };

    Subset s = build_s();
    if (s.empty()) {
      // No step was taken since the phase capture, so the weight-growth exit
      // cannot be the reason; advance the threshold.
      lambda *= (1.0 - eps);
      ++phase;
      trace.lambda_trace.push_back(lambda);
      continue;
    }

    bool weights_grew_out = false;
    while (!s.empty() && t < 1.0 - t_tol) {
      guard();
      // gamma = W / <w, A(x ∧ S)> with the phase-start W.
      Point x_on_s = restrict_to(x, s);
      std::vector<double> s_load = a.load(x_on_s);
      std::vector<double> terms;
      terms.reserve(s_load.size());
      for (int i = 0; i < m; ++i)
        if (s_load[static_cast<std::size_t>(i)] > 0)
          terms.push_back(weights.log_weight(i) +
                          std::log(s_load[static_cast<std::size_t>(i)]));
      if (terms.empty())
        throw guard_abort("mwu_solve: active step set has zero constraint load");
      const double gamma = std::exp(log_w_phase - log_sum_exp(terms));

      // Step caps: the weight rule gamma delta <= eps^2 / (4 log m) and the
      // clock t + delta <= 1. Candidates are geometric in the product
      // gamma delta between (eps/n)^3 and the weight cap; a product below
      // the floor always satisfies the rate condition, so the floor is a
      // safe fallback.
      const double weight_cap = eps * eps / (4.0 * gamma * log_m);
      const double time_cap = 1.0 - t;
      const double cap = std::min(weight_cap, time_cap);
      StepGrid grid;
      grid.floor = std::min(std::pow(eps / n, 3.0) / gamma, cap);
      grid.cap = cap;
      grid.ratio = 1.0 + eps;
      grid.fallback_floor = true;
      const double target = std::pow(1.0 - eps, 4.0) * lambda;

      Point direction(x_on_s);
      for (double& v : direction) v *= gamma;
      auto step = search_step(*obj.F, x, direction, target, grid);
      if (!step) throw guard_abort("mwu_solve: step search returned nothing despite floor fallback");

      IterationRecord rec;
      rec.phase = phase;
      rec.lambda = lambda;
      rec.delta = step->delta;
      rec.bound = step->bound == StepBound::kBudget
                      ? (cap == time_cap ? StepBound::kBudget : StepBound::kWeightCap)
                      : step->bound;
      rec.s_indices = s.indices();
      double potential = 0;
      for (int j : rec.s_indices)
        potential += grads[static_cast<std::size_t>(j)] * x[static_cast<std::size_t>(j)];
      rec.potential = potential;

      // x <- x + delta gamma (x ∧ S), kept raw; the gradient filter retires
      // saturated coordinates on the next refresh.
      const double scale = step->delta * gamma;
      for (int j : rec.s_indices)
        x[static_cast<std::size_t>(j)] += scale * x[static_cast<std::size_t>(j)];
      t += step->delta;

      std::vector<double> load_delta(s_load);
      for (double& v : load_delta) v *= scale;
#ifndef NDEBUG
      const double before = weights.log_weight_sum();
#endif
      weights.apply_load_delta(load_delta);
#ifndef NDEBUG
      // Per-step growth bound <w', 1> <= (1 + delta (1+eps) log m / eps) <w, 1>.
      assert(weights.log_weight_sum() <=
             before + std::log1p(step->delta * (1.0 + eps) * log_m / eps) + 1e-7);
#endif

      rec.budget_used = t;
      rec.objective = step->value_at_base + step->marginal;
      rec.log_weight_sum = weights.log_weight_sum();
      trace.iterations.push_back(std::move(rec));

      // Inner-loop weight guard (1 - eps) <w, 1> <= W.
      if (std::log1p(-eps) + weights.log_weight_sum() > log_w_phase + 1e-12) {
        weights_grew_out = true;
        break;
      }
      if (t >= 1.0 - t_tol) break;

      grads = obj.F->grad_all(x);
      s = build_s();
    }

    if (t >= 1.0 - t_tol) break;
    if (!weights_grew_out && s.empty()) {
      lambda *= (1.0 - eps);
      ++phase;
      trace.lambda_trace.push_back(lambda);
    }
    // Otherwise: re-enter the outer loop, recapturing W at the new weights.
  }

  return finish(std::move(x));
}

}  // namespace submax
