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

#include <atomic>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "submax/coverage.hpp"
#include "submax/point.hpp"
#include "submax/set_function.hpp"

namespace submax {

// Oracle for the multilinear extension F of a monotone submodular f:
// F(x) = E[f(Q)] with each element included independently with probability
// x_j, extended to the cone by truncation F(x) = F(x ∧ 1).
//
// Every public entry point issues its underlying queries as one adaptive
// batch: the rounds counter advances by exactly 1 per call regardless of how
// many values are computed. Solvers rely on this to realize the paper-style
// depth metric; anything that needs several data-dependent probes pays one
// round per probe.
class MultilinearOracle {
 public:
  virtual ~MultilinearOracle() = default;

  virtual int n() const = 0;

  double eval_F(const Point& x) const;
  std::vector<double> eval_F_batch(std::span<const Point> xs) const;

  // F'_j(x) = F(x with x_j := 1) − F(x with x_j := 0). Independent of the
  // current x_j by multilinearity; nonnegative for monotone f.
  double grad_coord(const Point& x, int j) const;
  std::vector<double> grad_batch(const Point& x, std::span<const int> coords) const;
  std::vector<double> grad_all(const Point& x) const;

  // F(x | y) = F(x ∨ y) − F(y).
  double marginal_F(const Point& x, const Point& y) const;

  // F(top_i | base) for many candidate tops over one base; one batch. This
  // is the query shape of the step-size search.
  std::vector<double> marginals_from(const Point& base, std::span<const Point> tops) const;

  void flush_round() const {
    counters_->rounds.fetch_add(1, std::memory_order_relaxed);
  }

  CounterSnapshot counters() const {
    return {counters_->calls.load(std::memory_order_relaxed),
            counters_->rounds.load(std::memory_order_relaxed)};
  }

  void reset_counters() const { counters_->reset(); }
  std::shared_ptr<OracleCounters> counter_handle() const { return counters_; }

 protected:
  explicit MultilinearOracle(std::shared_ptr<OracleCounters> counters)
      : counters_(std::move(counters)) {}

  // Raw queries: x is already truncated to the cube, no flush. Each
  // implementation accounts its primitive cost, either via note_call() for
  // closed forms or through a counter-sharing SetFunction for sampling.
  virtual double eval_raw(const Point& x) const = 0;
  virtual double grad_raw(const Point& x, int j) const;

  // Called once at the start of every public batch; sampling backends use it
  // to rotate their per-batch random streams.
  virtual void begin_batch() const {}

  void note_call() const { counters_->calls.fetch_add(1, std::memory_order_relaxed); }

  static double delegate_eval_raw(const MultilinearOracle& o, const Point& x) {
    return o.eval_raw(x);
  }
  static double delegate_grad_raw(const MultilinearOracle& o, const Point& x, int j) {
    return o.grad_raw(x, j);
  }

  void check_point(const Point& x) const;

 private:
  std::shared_ptr<OracleCounters> counters_;
};

// Closed form for coverage systems:
// F(x) = sum_e (1 − prod_{i: e in A_i} (1 − x_i)).
class CoverageMultilinear : public MultilinearOracle {
 public:
  explicit CoverageMultilinear(std::shared_ptr<const CoverageFunction> f)
      : MultilinearOracle(f->counter_handle()), f_(std::move(f)) {}

  int n() const override { return f_->n(); }

 protected:
  double eval_raw(const Point& x) const override;
  double grad_raw(const Point& x, int j) const override;

 private:
  std::shared_ptr<const CoverageFunction> f_;
};

// F(x) = <c, x>.
class ModularMultilinear : public MultilinearOracle {
 public:
  explicit ModularMultilinear(std::shared_ptr<const ModularSetFunction> f)
      : MultilinearOracle(f->counter_handle()), f_(std::move(f)) {}

  int n() const override { return f_->n(); }

 protected:
  double eval_raw(const Point& x) const override;
  double grad_raw(const Point& x, int j) const override;

 private:
  std::shared_ptr<const ModularSetFunction> f_;
};

// Exact expectation by full enumeration: F(x) = sum_S f(S) prod x prod (1-x).
// Desk-scale reference backend; refuses n > 20.
class EnumerationMultilinear : public MultilinearOracle {
 public:
  explicit EnumerationMultilinear(std::shared_ptr<const SetFunction> f);

  int n() const override { return f_->n(); }

 protected:
  double eval_raw(const Point& x) const override;
  double grad_raw(const Point& x, int j) const override;

 private:
  std::shared_ptr<const SetFunction> f_;
};

// Monte Carlo estimator for black-box f. With sample_count() =
// ceil(C/eps^2 * p * log d) samples, an estimate Z of F(x) in [0, M]
// satisfies |Z − F(x)| <= eps F(x) + (eps/p) M except with probability
// ~1/d^3. C is kSampleConstant below (the usual two-sided multiplicative
// Chernoff constant).
struct EstimatorConfig {
  double eps = 0.1;
  double p = 1;
  double d = 2;
  std::uint64_t seed = 0;
  // Same per-sample randomness for every coordinate within one batch; lowers
  // the variance of comparisons between coordinates.
  bool common_random_numbers = true;
  double sample_constant = kDefaultSampleConstant;

  static constexpr double kDefaultSampleConstant = 3.0;

  long long sample_count() const;
  void validate() const;
};

class SamplingMultilinear : public MultilinearOracle {
 public:
  SamplingMultilinear(std::shared_ptr<const SetFunction> f, EstimatorConfig config);

  int n() const override { return f_->n(); }
  const EstimatorConfig& config() const { return config_; }

 protected:
  double eval_raw(const Point& x) const override;
  double grad_raw(const Point& x, int j) const override;
  void begin_batch() const override;

 private:
  // Uniform draw for (sample s, coordinate i) in the current batch.
  double draw(std::uint64_t s, std::uint64_t i) const;

  std::shared_ptr<const SetFunction> f_;
  EstimatorConfig config_;
  mutable std::atomic<std::uint64_t> batch_index_{0};
  mutable std::atomic<std::uint64_t> nonce_{0};
};

// F_G(x) = F(x ∨ 1_G) − F(1_G), the multilinear extension of the
// contraction f_G. Shares the base oracle and its counters.
class ContractedMultilinear : public MultilinearOracle {
 public:
  ContractedMultilinear(std::shared_ptr<const MultilinearOracle> base, Subset g);

  int n() const override { return base_->n(); }

 protected:
  double eval_raw(const Point& x) const override;
  double grad_raw(const Point& x, int j) const override;

 private:
  std::shared_ptr<const MultilinearOracle> base_;
  Subset g_;
  Point g_point_;
  double fg_;
};

// One objective, two oracle views sharing instrumentation.
struct Objective {
  std::shared_ptr<const SetFunction> f;
  std::shared_ptr<const MultilinearOracle> F;

  int n() const { return f->n(); }
  CounterSnapshot counters() const { return f->counters(); }
  void reset_counters() const { f->reset_counters(); }
};

Objective make_coverage_objective(CoverageSystem sys);
Objective make_modular_objective(std::vector<double> weights);
// Black-box view: F and its gradient estimated by sampling f.
Objective make_blackbox_objective(std::shared_ptr<const SetFunction> f,
                                  EstimatorConfig config);
// Exact generic view via enumeration (n <= 20).
Objective make_enumeration_objective(std::shared_ptr<const SetFunction> f);
// Residual objective after committing to G.
Objective contract_objective(const Objective& base, const Subset& g);

}  // namespace submax
