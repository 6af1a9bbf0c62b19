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

#include "submax/multilinear.hpp"

#include <cmath>

#include "submax/rng.hpp"

namespace submax {

namespace {

// Product of (1 - x_i) over a set of coordinates, optionally skipping one.
// Direct product while all factors are comfortably positive; log-domain once
// any factor drops below 1e-12 so long products cannot misbehave.
double survival_product(const std::vector<int>& coords, const Point& x, int skip) {
  constexpr double kTiny = 1e-12;
  double prod = 1.0;
  bool tiny = false;
  for (int i : coords) {
    if (i == skip) continue;
    double factor = 1.0 - x[static_cast<std::size_t>(i)];
    if (factor < kTiny) {
      tiny = true;
      break;
    }
    prod *= factor;
  }
  if (!tiny) return prod;
  double sum_log = 0.0;
  for (int i : coords) {
    if (i == skip) continue;
    double factor = 1.0 - x[static_cast<std::size_t>(i)];
    if (factor <= 0.0) return 0.0;
    sum_log += std::log(factor);
  }
  return std::exp(sum_log);
}

}  // namespace

void MultilinearOracle::check_point(const Point& x) const {
  if (static_cast<int>(x.size()) != n())
    throw input_error("MultilinearOracle: point dimension mismatch");
}

double MultilinearOracle::grad_raw(const Point& x, int j) const {
  Point hi(x), lo(x);
  hi[static_cast<std::size_t>(j)] = 1.0;
  lo[static_cast<std::size_t>(j)] = 0.0;
  return eval_raw(hi) - eval_raw(lo);
}

double MultilinearOracle::eval_F(const Point& x) const {
  check_point(x);
  begin_batch();
  double v = eval_raw(clamped01(x));
  flush_round();
  return v;
}

std::vector<double> MultilinearOracle::eval_F_batch(std::span<const Point> xs) const {
  begin_batch();
  std::vector<double> out;
  out.reserve(xs.size());
  for (const Point& x : xs) {
    check_point(x);
    out.push_back(eval_raw(clamped01(x)));
  }
  flush_round();
  return out;
}

double MultilinearOracle::grad_coord(const Point& x, int j) const {
  check_point(x);
  if (j < 0 || j >= n()) throw input_error("grad_coord: coordinate out of range");
  begin_batch();
  double v = grad_raw(clamped01(x), j);
  flush_round();
  return v;
}

std::vector<double> MultilinearOracle::grad_batch(const Point& x,
                                                  std::span<const int> coords) const {
  check_point(x);
  if (coords.empty()) throw input_error("grad_batch: empty coordinate set");
  for (int j : coords)
    if (j < 0 || j >= n()) throw input_error("grad_batch: coordinate out of range");
  begin_batch();
  Point t = clamped01(x);
  std::vector<double> out;
  out.reserve(coords.size());
  for (int j : coords) out.push_back(grad_raw(t, j));
  flush_round();
  return out;
}

std::vector<double> MultilinearOracle::grad_all(const Point& x) const {
  std::vector<int> coords(static_cast<std::size_t>(n()));
  for (int j = 0; j < n(); ++j) coords[static_cast<std::size_t>(j)] = j;
  return grad_batch(x, coords);
}

double MultilinearOracle::marginal_F(const Point& x, const Point& y) const {
  check_point(x);
  check_point(y);
  begin_batch();
  Point top = clamped01(join(x, y));
  double v = eval_raw(top) - eval_raw(clamped01(y));
  flush_round();
  return v;
}

std::vector<double> MultilinearOracle::marginals_from(const Point& base,
                                                      std::span<const Point> tops) const {
  check_point(base);
  begin_batch();
  double at_base = eval_raw(clamped01(base));
  std::vector<double> out;
  out.reserve(tops.size());
  for (const Point& t : tops) {
    check_point(t);
    out.push_back(eval_raw(clamped01(join(t, base))) - at_base);
  }
  flush_round();
  return out;
}

// ---------------------------------------------------------------------------
// Coverage backend

double CoverageMultilinear::eval_raw(const Point& x) const {
  note_call();
  const CoverageSystem& sys = f_->system();
  double total = 0.0;
  for (int e = 0; e < sys.universe_size; ++e)
    total += 1.0 - survival_product(sys.element_to_sets[static_cast<std::size_t>(e)], x, -1);
  return total;
}

double CoverageMultilinear::grad_raw(const Point& x, int j) const {
  note_call();
  const CoverageSystem& sys = f_->system();
  double total = 0.0;
  for (int e : sys.sets[static_cast<std::size_t>(j)])
    total += survival_product(sys.element_to_sets[static_cast<std::size_t>(e)], x, j);
  return total;
}

// ---------------------------------------------------------------------------
// Modular backend

double ModularMultilinear::eval_raw(const Point& x) const {
  note_call();
  return dot(f_->weights(), x);
}

double ModularMultilinear::grad_raw(const Point&, int j) const {
  note_call();
  return f_->weights()[static_cast<std::size_t>(j)];
}

// ---------------------------------------------------------------------------
// Enumeration backend

EnumerationMultilinear::EnumerationMultilinear(std::shared_ptr<const SetFunction> f)
    : MultilinearOracle(f->counter_handle()), f_(std::move(f)) {
  if (f_->n() > 20)
    throw input_error(
        "EnumerationMultilinear: n > 20; use the sampling backend for large ground sets");
}

double EnumerationMultilinear::eval_raw(const Point& x) const {
  const int n = f_->n();
  double total = 0.0;
  const std::uint64_t limit = 1ull << n;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    double p = 1.0;
    for (int i = 0; i < n && p > 0.0; ++i)
      p *= (mask >> i) & 1ull ? x[static_cast<std::size_t>(i)]
                              : 1.0 - x[static_cast<std::size_t>(i)];
    if (p > 0.0) total += p * f_->value(Subset::from_mask(n, mask));
  }
  return total;
}

double EnumerationMultilinear::grad_raw(const Point& x, int j) const {
  // Enumerate over S not containing j: F'_j(x) = E[f(S + j) − f(S)].
  const int n = f_->n();
  double total = 0.0;
  const std::uint64_t limit = 1ull << n;
  const std::uint64_t jbit = 1ull << j;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    if (mask & jbit) continue;
    double p = 1.0;
    for (int i = 0; i < n && p > 0.0; ++i) {
      if (i == j) continue;
      p *= (mask >> i) & 1ull ? x[static_cast<std::size_t>(i)]
                              : 1.0 - x[static_cast<std::size_t>(i)];
    }
    if (p > 0.0)
      total += p * (f_->value(Subset::from_mask(n, mask | jbit)) -
                    f_->value(Subset::from_mask(n, mask)));
  }
  return total;
}

// ---------------------------------------------------------------------------
// Sampling backend

long long EstimatorConfig::sample_count() const {
  double r = sample_constant * p * std::log(d) / (eps * eps);
  long long count = static_cast<long long>(std::ceil(r));
  return count < 1 ? 1 : count;
}

void EstimatorConfig::validate() const {
  if (!(eps > 0.0 && eps < 0.5)) throw input_error("EstimatorConfig: eps must lie in (0, 1/2)");
  if (!(p >= 1.0)) throw input_error("EstimatorConfig: p must be >= 1");
  if (!(d >= 2.0)) throw input_error("EstimatorConfig: d must be >= 2");
  if (!(sample_constant > 0)) throw input_error("EstimatorConfig: sample constant must be positive");
}

SamplingMultilinear::SamplingMultilinear(std::shared_ptr<const SetFunction> f,
                                         EstimatorConfig config)
    : MultilinearOracle(f->counter_handle()), f_(std::move(f)), config_(config) {
  config_.validate();
}

void SamplingMultilinear::begin_batch() const {
  batch_index_.fetch_add(1, std::memory_order_relaxed);
}

double SamplingMultilinear::draw(std::uint64_t s, std::uint64_t i) const {
  std::uint64_t batch = batch_index_.load(std::memory_order_relaxed);
  std::uint64_t key = config_.common_random_numbers
                          ? batch
                          : mix64(batch, nonce_.load(std::memory_order_relaxed));
  return to_unit(mix64(derive_seed(config_.seed, "estimator"), key, s, i));
}

double SamplingMultilinear::eval_raw(const Point& x) const {
  nonce_.fetch_add(1, std::memory_order_relaxed);
  const int n = f_->n();
  const long long r = config_.sample_count();
  double sum = 0.0;
  for (long long s = 0; s < r; ++s) {
    Subset q(n);
    for (int i = 0; i < n; ++i)
      if (draw(static_cast<std::uint64_t>(s), static_cast<std::uint64_t>(i)) <
          x[static_cast<std::size_t>(i)])
        q.add(i);
    sum += f_->value(q);
  }
  return sum / static_cast<double>(r);
}

double SamplingMultilinear::grad_raw(const Point& x, int j) const {
  // Mean margin of j over samples of x restricted away from j; with common
  // random numbers the samples coincide across coordinates of one batch.
  nonce_.fetch_add(1, std::memory_order_relaxed);
  const int n = f_->n();
  const long long r = config_.sample_count();
  double sum = 0.0;
  for (long long s = 0; s < r; ++s) {
    Subset q(n);
    for (int i = 0; i < n; ++i) {
      if (i == j) continue;
      if (draw(static_cast<std::uint64_t>(s), static_cast<std::uint64_t>(i)) <
          x[static_cast<std::size_t>(i)])
        q.add(i);
    }
    double without = f_->value(q);
    q.add(j);
    sum += f_->value(q) - without;
  }
  return sum / static_cast<double>(r);
}

// ---------------------------------------------------------------------------
// Contraction

ContractedMultilinear::ContractedMultilinear(std::shared_ptr<const MultilinearOracle> base,
                                             Subset g)
    : MultilinearOracle(base->counter_handle()),
      base_(std::move(base)),
      g_(std::move(g)),
      g_point_(indicator(g_)),
      fg_(delegate_eval_raw(*base_, g_point_)) {}

double ContractedMultilinear::eval_raw(const Point& x) const {
  return delegate_eval_raw(*base_, join(x, g_point_)) - fg_;
}

double ContractedMultilinear::grad_raw(const Point& x, int j) const {
  if (g_.contains(j)) return 0.0;  // frozen coordinate
  return delegate_grad_raw(*base_, join(x, g_point_), j);
}

// ---------------------------------------------------------------------------
// Factories

Objective make_coverage_objective(CoverageSystem sys) {
  auto f = std::make_shared<CoverageFunction>(std::move(sys));
  auto F = std::make_shared<CoverageMultilinear>(f);
  return Objective{f, F};
}

Objective make_modular_objective(std::vector<double> weights) {
  auto f = std::make_shared<ModularSetFunction>(std::move(weights));
  auto F = std::make_shared<ModularMultilinear>(f);
  return Objective{f, F};
}

Objective make_blackbox_objective(std::shared_ptr<const SetFunction> f,
                                  EstimatorConfig config) {
  auto F = std::make_shared<SamplingMultilinear>(f, config);
  return Objective{std::move(f), std::move(F)};
}

Objective make_enumeration_objective(std::shared_ptr<const SetFunction> f) {
  auto F = std::make_shared<EnumerationMultilinear>(f);
  return Objective{std::move(f), std::move(F)};
}

Objective contract_objective(const Objective& base, const Subset& g) {
  auto f = std::make_shared<ContractedSetFunction>(base.f, g);
  auto F = std::make_shared<ContractedMultilinear>(base.F, g);
  return Objective{std::move(f), std::move(F)};
}

}  // namespace submax
