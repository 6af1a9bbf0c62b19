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

#include "submax/knapsack.hpp"

#include <algorithm>
#include <cmath>

#include "submax/rng.hpp"
#include "submax/step_size.hpp"

namespace submax {

namespace {

constexpr double kSaturated = 1.0 - 1e-12;
constexpr double kFilterTol = 1.0 - 1e-12;
constexpr double kEulerInv = 0.36787944117144233;
constexpr double kBudgetTol = 1e-12;

bool is_active(const std::vector<char>& active, int j) {
  return active.empty() || active[static_cast<std::size_t>(j)];
}

}  // namespace

double KnapsackInstance::heavy_threshold(double eps) const {
  double log_n = std::log(static_cast<double>(std::max(n(), 2)));
  return eps * eps / (4.0 * log_n);
}

void KnapsackInstance::validate() const {
  if (costs.empty()) throw input_error("KnapsackInstance: empty cost vector");
  for (double a : costs)
    if (!(a > 0.0 && a <= 1.0))
      throw input_error("KnapsackInstance: costs must lie in (0, 1]");
}

double KnapsackInstance::cost_of(const Subset& s) const {
  double c = 0;
  for (int j : s.indices()) c += costs[static_cast<std::size_t>(j)];
  return c;
}

double KnapsackInstance::cost_of(const Point& x) const { return dot(costs, x); }

double KnapsackInstance::max_cost() const {
  return *std::max_element(costs.begin(), costs.end());
}

void KnapsackParams::validate() const {
  if (!(eps > 0.0 && eps <= 0.3))
    throw input_error("KnapsackParams: eps must lie in (0, 0.3]");
  if (max_rounds < 1) throw input_error("KnapsackParams: max_rounds must be positive");
}

KnapsackResult greedy_knapsack(const Objective& obj, const KnapsackInstance& inst,
                               const KnapsackParams& params) {
  inst.validate();
  params.validate();
  const int n = obj.n();
  if (inst.n() != n) throw input_error("greedy_knapsack: cost vector size mismatch");
  const double eps = params.eps;
  const std::vector<double>& a = inst.costs;
  const double heavy = inst.heavy_threshold(eps);
  const CounterSnapshot start = obj.counters();

  GreedyTrace trace;
  KnapsackExit exit_reason = KnapsackExit::kLambda;

  auto guard = [&]() {
    if (obj.counters().rounds - start.rounds > params.max_rounds)
      throw guard_abort("adaptive round guard exceeded; check eps and instance scale");
  };

  std::vector<double> singles = obj.F->grad_all(zeros(n));
  double singleton_max = 0, singleton_sum = 0;
  for (int j = 0; j < n; ++j) {
    if (!is_active(params.active, j)) continue;
    singleton_max = std::max(singleton_max, singles[static_cast<std::size_t>(j)]);
    singleton_sum += singles[static_cast<std::size_t>(j)];
  }

  auto finish = [&](Point x, KnapsackExit reason) -> KnapsackResult {
    double value = obj.F->eval_F(x);
    double slack = inst.cost_of(x);
    trace.adaptive_rounds = obj.counters().rounds - start.rounds;
    trace.oracle_calls = obj.counters().calls - start.calls;
    return {{std::move(x), value, slack}, trace, reason};
  };

  // Everything cheaper than eps/n is taken outright; it spends at most an
  // eps fraction of the budget.
  Point x = zeros(n);
  for (int j = 0; j < n; ++j)
    if (is_active(params.active, j) && a[static_cast<std::size_t>(j)] <= eps / n)
      x[static_cast<std::size_t>(j)] = 1.0;

  if (singleton_max <= 0.0) return finish(std::move(x), KnapsackExit::kLambda);

  double lambda = params.lambda0.value_or(singleton_sum);
  if (lambda < singleton_max * kFilterTol)
    throw input_error("lambda0 is below max_j f({j}), so it cannot upper-bound opt");
  const double lambda_min = singleton_max * kEulerInv;
  trace.lambda_trace.push_back(lambda);

  int phase = 0;
  while (inst.cost_of(x) < 1.0 - kBudgetTol && lambda >= lambda_min * kFilterTol) {
    guard();
    std::vector<double> grads = obj.F->grad_all(x);
    auto build_s = [&]() {
      Subset s(n);
      for (int j = 0; j < n; ++j)
        if (is_active(params.active, j) && x[static_cast<std::size_t>(j)] < kSaturated &&
            grads[static_cast<std::size_t>(j)] >=
                (1.0 - eps) * lambda * a[static_cast<std::size_t>(j)] * kFilterTol)
          s.add(j);
      return s;
    };
    Subset s = build_s();

    bool stalled = false;
    while (!s.empty() && inst.cost_of(x) < 1.0 - kBudgetTol) {
      guard();
      // Heavy items first, integrally, lowest index this round.
      int heavy_j = -1;
      for (int j : s.indices()) {
        if (a[static_cast<std::size_t>(j)] >= heavy) {
          heavy_j = j;
          break;
        }
      }
      if (heavy_j >= 0) {
        if (inst.cost_of(x) + a[static_cast<std::size_t>(heavy_j)] <= 1.0 + kBudgetTol) {
          IterationRecord rec;
          rec.phase = phase;
          rec.lambda = lambda;
          rec.delta = 1.0;
          rec.bound = StepBound::kHeavy;
          rec.s_indices = s.indices();
          rec.a_mass = inst.cost_of(Subset::from_indices(n, rec.s_indices));
          x[static_cast<std::size_t>(heavy_j)] = 1.0;
          rec.budget_used = inst.cost_of(x);
          trace.iterations.push_back(std::move(rec));
          grads = obj.F->grad_all(x);
          s = build_s();
          continue;
        }
        // A worthwhile heavy item no longer fits; stop here. One more
        // single item on top of x would reach the cardinality-grade bound.
        return finish(std::move(x), KnapsackExit::kHeavyExit);
      }

      // Light step: uniform increase over S at rate lambda per unit cost.
      const double a_mass = inst.cost_of(Subset::from_indices(n, s.indices()));
      const double target = (1.0 - eps) * (1.0 - eps) * lambda * a_mass;
      const double cap = (1.0 - inst.cost_of(x)) / a_mass;

      StepGrid grid;
      grid.floor = std::min(std::pow(eps / n, 3.0), cap);
      grid.cap = cap;
      grid.ratio = 1.0 + eps / 2.0;
      auto step = search_step(*obj.F, x, indicator(s), target, grid);
      if (!step) {
        stalled = true;
        break;
      }

      IterationRecord rec;
      rec.phase = phase;
      rec.lambda = lambda;
      rec.delta = step->delta;
      rec.bound = step->bound;
      rec.s_indices = s.indices();
      rec.a_mass = a_mass;
      x = clamped01(add_on(x, s, step->delta));
      rec.budget_used = inst.cost_of(x);
      rec.objective = step->value_at_base + step->marginal;
      trace.iterations.push_back(std::move(rec));

      grads = obj.F->grad_all(x);
      s = build_s();
    }

    if (inst.cost_of(x) >= 1.0 - kBudgetTol) {
      exit_reason = KnapsackExit::kBudget;
      break;
    }
    lambda *= (1.0 - eps);
    ++phase;
    trace.lambda_trace.push_back(lambda);
    (void)stalled;
  }

  if (inst.cost_of(x) >= 1.0 - kBudgetTol) exit_reason = KnapsackExit::kBudget;
  return finish(std::move(x), exit_reason);
}

RandomizedKnapsackResult randomized_greedy_knapsack(const Objective& obj,
                                                    const KnapsackInstance& inst,
                                                    const KnapsackParams& params) {
  inst.validate();
  params.validate();
  const int n = obj.n();
  if (inst.n() != n) throw input_error("randomized_greedy_knapsack: cost vector size mismatch");
  const double eps = params.eps;
  const std::vector<double>& a = inst.costs;
  const double heavy_cost = inst.heavy_threshold(eps);
  const double log_n = std::log(static_cast<double>(std::max(n, 2)));
  const CounterSnapshot start = obj.counters();

  GreedyTrace trace;
  RandomizedKnapsackResult result;
  result.q = Subset(n);

  auto guard = [&]() {
    if (obj.counters().rounds - start.rounds > params.max_rounds)
      throw guard_abort("adaptive round guard exceeded; check eps and instance scale");
  };

  double f_q = 0;
  std::vector<double> margins(static_cast<std::size_t>(n), 0.0);
  auto refresh_margins = [&]() {
    f_q = obj.f->value(result.q);
    for (int j = 0; j < n; ++j) {
      if (result.q.contains(j) || !is_active(params.active, j)) {
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

  double singleton_max = 0, singleton_sum = 0;
  for (int j = 0; j < n; ++j) {
    singleton_max = std::max(singleton_max, margins[static_cast<std::size_t>(j)]);
    singleton_sum += margins[static_cast<std::size_t>(j)];
  }

  auto finish = [&]() -> RandomizedKnapsackResult {
    result.value = f_q;
    trace.adaptive_rounds = obj.counters().rounds - start.rounds;
    trace.oracle_calls = obj.counters().calls - start.calls;
    result.trace = std::move(trace);
    return std::move(result);
  };

  if (singleton_max <= 0.0) return finish();

  double lambda = params.lambda0.value_or(singleton_sum);
  if (lambda < singleton_max * kFilterTol)
    throw input_error("lambda0 is below max_j f({j}), so it cannot upper-bound opt");
  const double lambda_min = singleton_max * kEulerInv;
  trace.lambda_trace.push_back(lambda);

  double t = 0;
  std::uint64_t sample_nonce = 0;
  const std::uint64_t sample_seed = derive_seed(params.seed, "rpgk/sample");
  int phase = 0;

  auto build_s = [&]() {
    Subset s(n);
    for (int j = 0; j < n; ++j)
      if (!result.q.contains(j) && is_active(params.active, j) &&
          margins[static_cast<std::size_t>(j)] >=
              (1.0 - eps) * lambda * a[static_cast<std::size_t>(j)] * kFilterTol)
        s.add(j);
    return s;
  };

  while (t <= 1.0 - kBudgetTol && lambda >= lambda_min * kFilterTol) {
    guard();
    Subset s = build_s();
    bool stalled = false;
    while (!s.empty() && t <= 1.0 - eps - kBudgetTol) {
      guard();
      // Expensive or high-margin items are decided deterministically so the
      // randomness only ever moves the objective and budget by small steps.
      const double margin_threshold = eps * eps * lambda / (4.0 * log_n);
      int det_j = -1;
      for (int j : s.indices()) {
        if (a[static_cast<std::size_t>(j)] >= heavy_cost ||
            margins[static_cast<std::size_t>(j)] >= margin_threshold) {
          det_j = j;
          break;
        }
      }
      if (det_j >= 0) {
        if (t + a[static_cast<std::size_t>(det_j)] <= 1.0 - eps + kBudgetTol) {
          IterationRecord rec;
          rec.phase = phase;
          rec.lambda = lambda;
          rec.delta = 1.0;
          rec.bound = StepBound::kHeavy;
          rec.s_indices = s.indices();
          result.q.add(det_j);
          t += a[static_cast<std::size_t>(det_j)];
          rec.budget_used = t;
          refresh_margins();
          rec.objective = f_q;
          trace.iterations.push_back(std::move(rec));
          s = build_s();
          continue;
        }
        return finish();
      }

      const double a_mass = inst.cost_of(Subset::from_indices(n, s.indices()));
      const double target = (1.0 - eps) * (1.0 - eps) * lambda * a_mass;
      const double cap = std::min(1.0, (1.0 - eps - t) / a_mass);
      if (cap <= 0.0) break;

      StepGrid grid;
      grid.floor = std::min(std::pow(eps / n, 3.0), cap);
      grid.cap = cap;
      grid.ratio = 1.0 + eps / 2.0;
      auto step = search_step(*obj.F, indicator(result.q), indicator(s), target, grid);
      if (!step) {
        stalled = true;
        break;
      }

      IterationRecord rec;
      rec.phase = phase;
      rec.lambda = lambda;
      rec.delta = step->delta;
      rec.bound = step->bound;
      rec.s_indices = s.indices();
      rec.a_mass = a_mass;
      for (int j : s.indices()) {
        double u = to_unit(mix64(sample_seed, sample_nonce, static_cast<std::uint64_t>(j)));
        if (u < step->delta) result.q.add(j);
      }
      ++sample_nonce;
      t += step->delta * a_mass;
      rec.budget_used = t;

      if (inst.cost_of(result.q) > 1.0 + kBudgetTol) {
        result.budget_violation = true;
        trace.aborted = true;
        trace.abort_reason = "knapsack budget exceeded by sampled set";
        refresh_margins();
        rec.objective = f_q;
        trace.iterations.push_back(std::move(rec));
        return finish();
      }

      refresh_margins();
      rec.objective = f_q;
      trace.iterations.push_back(std::move(rec));
      s = build_s();
    }

    if (t > 1.0 - kBudgetTol) break;
    lambda *= (1.0 - eps);
    ++phase;
    trace.lambda_trace.push_back(lambda);
    (void)stalled;
  }

  return finish();
}

PartialEnumerationResult partial_enumeration(const Objective& obj,
                                             const KnapsackInstance& inst,
                                             double eps, int guess_size,
                                             const KnapsackParams& base_params) {
  inst.validate();
  if (guess_size < 0 || guess_size > 3)
    throw input_error("partial_enumeration: guess_size must lie in 0..3 (3 suffices)");
  const int n = obj.n();
  if (inst.n() != n) throw input_error("partial_enumeration: cost vector size mismatch");
  const std::vector<double>& a = inst.costs;
  const CounterSnapshot start = obj.counters();

  // All seed sets of size <= guess_size that fit the budget, in
  // lexicographic order.
  std::vector<Subset> guesses;
  guesses.push_back(Subset(n));
  std::vector<int> stack;
  auto grow = [&](auto&& self, int from, int remaining, double used) -> void {
    if (remaining == 0) return;
    for (int j = from; j < n; ++j) {
      double c = used + a[static_cast<std::size_t>(j)];
      if (c > 1.0 + 1e-12) continue;
      stack.push_back(j);
      guesses.push_back(Subset::from_indices(n, stack));
      self(self, j + 1, remaining - 1, c);
      stack.pop_back();
    }
  };
  grow(grow, 0, guess_size, 0.0);

  PartialEnumerationResult best;
  best.branches = static_cast<int>(guesses.size());
  best.solution.objective = -1;
  long long max_branch_rounds = 0;

  for (const Subset& g : guesses) {
    const CounterSnapshot branch_start = obj.counters();
    const double used = inst.cost_of(g);
    const double residual = 1.0 - used;

    Objective sub = g.empty() ? obj : contract_objective(obj, g);
    Point x_full = indicator(g);
    GreedyTrace branch_trace;
    bool heavy_exit = false;

    if (residual > 1e-9) {
      // Scale the leftover budget back to 1 and keep only items that fit.
      KnapsackInstance scaled;
      scaled.costs.assign(a.begin(), a.end());
      std::vector<char> active(static_cast<std::size_t>(n), 0);
      bool any = false;
      for (int j = 0; j < n; ++j) {
        double c = a[static_cast<std::size_t>(j)] / residual;
        scaled.costs[static_cast<std::size_t>(j)] = std::min(c, 1.0);
        if (!g.contains(j) && c <= 1.0 + 1e-12) {
          active[static_cast<std::size_t>(j)] = 1;
          any = true;
        }
      }
      if (any) {
        KnapsackParams p = base_params;
        p.eps = eps;
        p.lambda0.reset();
        p.active = std::move(active);
        KnapsackResult r = greedy_knapsack(sub, scaled, p);
        branch_trace = std::move(r.trace);
        heavy_exit = r.exit_reason == KnapsackExit::kHeavyExit;
        for (int j = 0; j < n; ++j)
          if (p.active[static_cast<std::size_t>(j)])
            x_full[static_cast<std::size_t>(j)] = r.solution.x[static_cast<std::size_t>(j)];
      }
    }

    // On a heavy exit, one more single item on top of x recovers the
    // cardinality-grade bound; try every one that still fits.
    double spent = inst.cost_of(clamped01(x_full));
    std::vector<Point> completions;
    std::vector<int> completion_items;
    if (heavy_exit) {
      for (int j = 0; j < n; ++j) {
        if (x_full[static_cast<std::size_t>(j)] >= 1.0 - 1e-12) continue;
        if (spent + a[static_cast<std::size_t>(j)] > 1.0 + 1e-12) continue;
        Point with(x_full);
        with[static_cast<std::size_t>(j)] = 1.0;
        completions.push_back(std::move(with));
        completion_items.push_back(j);
      }
    }
    std::vector<Point> batch;
    batch.push_back(x_full);
    for (Point& p : completions) batch.push_back(std::move(p));
    std::vector<double> values = obj.F->eval_F_batch(batch);

    double branch_value = values[0];
    Point branch_x = x_full;
    for (std::size_t i = 0; i < completion_items.size(); ++i) {
      if (values[i + 1] > branch_value) {
        branch_value = values[i + 1];
        branch_x = x_full;
        branch_x[static_cast<std::size_t>(completion_items[i])] = 1.0;
      }
    }

    max_branch_rounds = std::max(max_branch_rounds,
                                 obj.counters().rounds - branch_start.rounds);

    if (branch_value > best.solution.objective) {
      best.solution.x = clamped01(branch_x);
      best.solution.objective = branch_value;
      best.solution.feasibility_slack = inst.cost_of(best.solution.x);
      best.guess = g;
      best.trace.lambda_trace = branch_trace.lambda_trace;
      best.trace.iterations = branch_trace.iterations;
    }
  }

  // Branches are independent, so the depth of the whole sweep is the
  // deepest branch; total work is the sum, which the shared counters hold.
  best.trace.adaptive_rounds = max_branch_rounds;
  best.trace.oracle_calls = obj.counters().calls - start.calls;
  return best;
}

}  // namespace submax
