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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "submax/generators.hpp"
#include "submax/multilinear.hpp"
#include "submax/rng.hpp"

using namespace submax;

namespace {

CoverageSystem two_sets() { return CoverageSystem::make(3, {{0, 1}, {1, 2}}); }

Point random_point(int n, std::uint64_t seed) {
  Point x(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = to_unit(mix64(seed, i));
  return x;
}

}  // namespace

TEST_CASE("coverage closed form matches the hand expectation") {
  Objective obj = make_coverage_objective(two_sets());
  // Expectation over four subsets: (0 + 2 + 2 + 3) / 4.
  CHECK(obj.F->eval_F({0.5, 0.5}) == doctest::Approx(1.75).epsilon(1e-12));
  CHECK(obj.F->eval_F({0.0, 0.0}) == 0.0);
  CHECK(obj.F->eval_F({1.0, 1.0}) == doctest::Approx(3.0));  // f of the full set
}

TEST_CASE("gradient coordinates on the coverage closed form") {
  Objective obj = make_coverage_objective(two_sets());
  // F(1, 0.5) = 2.5, F(0, 0.5) = 1.0.
  CHECK(obj.F->grad_coord({0.5, 0.5}, 0) == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(obj.F->grad_coord({0.5, 0.5}, 1) == doctest::Approx(1.5).epsilon(1e-12));
}

TEST_CASE("modular gradient is the weight, everywhere") {
  Objective obj = make_modular_objective({3, 2, 1});
  for (int j = 0; j < 3; ++j) {
    CHECK(obj.F->grad_coord({0.2, 0.9, 0.5}, j) ==
          doctest::Approx(obj.f->value(Subset::from_indices(3, std::vector<int>{j}))));
  }
}

TEST_CASE("redundant element has zero marginal at the top") {
  // Two identical sets: at x = 1 each is fully redundant.
  Objective obj = make_coverage_objective(CoverageSystem::make(2, {{0, 1}, {0, 1}}));
  CHECK(obj.F->grad_coord({1.0, 1.0}, 0) == doctest::Approx(0.0));
}

TEST_CASE("marginal_F identities") {
  Objective obj = make_coverage_objective(two_sets());
  Point x{0.5, 0.5};
  CHECK(obj.F->marginal_F(x, x) == doctest::Approx(0.0));
  CHECK(obj.F->marginal_F(x, {0.0, 0.0}) == doctest::Approx(1.75));

  Objective mod = make_modular_objective({3, 2, 1});
  Point y{0.1, 0.2, 0.3};
  Point z{0.5, 0.2, 0.9};
  // x >= y: marginal is <c, x - y>.
  CHECK(mod.F->marginal_F(z, y) == doctest::Approx(3 * 0.4 + 0 + 1 * 0.6));
}

TEST_CASE("grad_batch equals per-coordinate gradients and costs one round") {
  Objective obj = make_coverage_objective(two_sets());
  Point x{0.5, 0.5};
  auto before = obj.counters();
  std::vector<double> g = obj.F->grad_batch(x, std::vector<int>{0, 1});
  CHECK(obj.counters().rounds == before.rounds + 1);
  CHECK(g[0] == doctest::Approx(1.5));
  CHECK(g[1] == doctest::Approx(1.5));

  std::vector<double> one = obj.F->grad_batch(x, std::vector<int>{1});
  CHECK(one.size() == 1);
  CHECK(one[0] == doctest::Approx(obj.F->grad_coord(x, 1)));

  Objective mod = make_modular_objective({3, 2, 1});
  std::vector<double> all = mod.F->grad_all({0.3, 0.3, 0.3});
  CHECK(all == std::vector<double>{3, 2, 1});
}

TEST_CASE("multilinearity: F is linear in each coordinate") {
  CoverageSystem sys = generate_random_coverage(12, 6, 0.4, 5);
  Objective obj = make_coverage_objective(sys);
  for (int trial = 0; trial < 50; ++trial) {
    Point x = random_point(6, mix64(99, trial));
    int j = trial % 6;
    double t = to_unit(mix64(7, trial));
    Point x0(x), x1(x), xt(x);
    x0[j] = 0;
    x1[j] = 1;
    xt[j] = t;
    double lhs = obj.F->eval_F(xt);
    double rhs = (1 - t) * obj.F->eval_F(x0) + t * obj.F->eval_F(x1);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
    // Gradient identity.
    CHECK(obj.F->grad_coord(x, j) ==
          doctest::Approx(obj.F->eval_F(x1) - obj.F->eval_F(x0)).epsilon(1e-9));
  }
}

TEST_CASE("cross second differences are nonpositive") {
  CoverageSystem sys = generate_random_coverage(12, 6, 0.4, 13);
  Objective obj = make_coverage_objective(sys);
  for (int trial = 0; trial < 50; ++trial) {
    Point x = random_point(6, mix64(4242, trial));
    int i = trial % 6, j = (trial + 1 + trial / 6) % 6;
    if (i == j) continue;
    Point y(x);
    y[i] = 0;
    y[j] = 0;
    Point yi(y), yj(y), yij(y);
    yi[i] = 1;
    yj[j] = 1;
    yij[i] = 1;
    yij[j] = 1;
    double second = obj.F->eval_F(yij) - obj.F->eval_F(yi) - obj.F->eval_F(yj) +
                    obj.F->eval_F(y);
    CHECK(second <= 1e-9);
  }
}

TEST_CASE("monotone concavity: slopes along nonnegative directions decrease") {
  CoverageSystem sys = generate_random_coverage(12, 6, 0.4, 23);
  Objective obj = make_coverage_objective(sys);
  for (int trial = 0; trial < 20; ++trial) {
    Point x = random_point(6, mix64(61, trial));
    for (double& v : x) v *= 0.4;
    Point d = random_point(6, mix64(62, trial));
    const int grid = 6;
    double prev_slope = std::numeric_limits<double>::infinity();
    double prev_value = obj.F->eval_F(x);
    for (int g = 1; g <= grid; ++g) {
      double step = 0.1 * g;
      Point xg(x);
      for (std::size_t i = 0; i < xg.size(); ++i) xg[i] += step * d[i];
      double value = obj.F->eval_F(xg);
      double slope = (value - prev_value) / 0.1;
      CHECK(slope <= prev_slope + 1e-7);
      prev_slope = slope;
      prev_value = value;
    }
  }
}

TEST_CASE("truncation: coordinates above one are clamped at the boundary") {
  Objective obj = make_coverage_objective(two_sets());
  CHECK(obj.F->eval_F({1.7, 0.5}) == obj.F->eval_F({1.0, 0.5}));
  CHECK(obj.F->eval_F({2.0, 3.0}) == obj.F->eval_F({1.0, 1.0}));
}

TEST_CASE("enumeration backend matches the coverage closed form") {
  CoverageSystem sys = generate_random_coverage(10, 5, 0.5, 31);
  Objective exact = make_coverage_objective(sys);
  Objective enumerated =
      make_enumeration_objective(std::make_shared<CoverageFunction>(sys));
  for (int trial = 0; trial < 10; ++trial) {
    Point x = random_point(5, mix64(77, trial));
    CHECK(enumerated.F->eval_F(x) == doctest::Approx(exact.F->eval_F(x)).epsilon(1e-9));
    int j = trial % 5;
    CHECK(enumerated.F->grad_coord(x, j) ==
          doctest::Approx(exact.F->grad_coord(x, j)).epsilon(1e-9));
  }
}

TEST_CASE("enumeration backend refuses n > 20") {
  auto f = std::make_shared<ModularSetFunction>(std::vector<double>(21, 1.0));
  CHECK_THROWS_AS(make_enumeration_objective(f), input_error);
}

TEST_CASE("estimator config validation and sample count") {
  EstimatorConfig cfg;
  cfg.eps = 0.1;
  cfg.p = 16;
  cfg.d = 16;
  cfg.validate();
  // ceil(3 * 16 * ln 16 / 0.01)
  CHECK(cfg.sample_count() == static_cast<long long>(std::ceil(3.0 * 16 * std::log(16.0) / 0.01)));

  cfg.eps = 0.6;
  CHECK_THROWS_AS(cfg.validate(), input_error);
  cfg.eps = 0.1;
  cfg.p = 0.5;
  CHECK_THROWS_AS(cfg.validate(), input_error);
  cfg.p = 1;
  cfg.d = 1;
  CHECK_THROWS_AS(cfg.validate(), input_error);
}

TEST_CASE("sampling backend is deterministic per seed and respects the error band") {
  CoverageSystem sys = generate_random_coverage(16, 8, 0.4, 47);
  auto f = std::make_shared<CoverageFunction>(sys);
  EstimatorConfig cfg;
  cfg.eps = 0.2;
  cfg.p = 8;
  cfg.d = 8;
  cfg.seed = 5;

  Objective sampled = make_blackbox_objective(f, cfg);
  Objective exact = make_coverage_objective(sys);

  Point x = random_point(8, 321);
  double z1 = sampled.F->eval_F(x);
  // Fresh oracle, same seed: identical batch indices, identical estimate.
  Objective sampled2 = make_blackbox_objective(std::make_shared<CoverageFunction>(sys), cfg);
  CHECK(sampled2.F->eval_F(x) == z1);

  // Small-trial sanity version of the error-band contract (the acceptance
  // suite runs the full 200-trial version).
  const double big_m = exact.f->value(Subset::full(8));
  int violations = 0;
  const int trials = 40;
  for (int t = 0; t < trials; ++t) {
    Point xt = random_point(8, mix64(1000, t));
    double truth = exact.F->eval_F(xt);
    double est = sampled.F->eval_F(xt);
    double band = cfg.eps * truth + (cfg.eps / cfg.p) * big_m;
    if (std::abs(est - truth) > band) ++violations;
  }
  CHECK(violations <= trials / 10);
}

TEST_CASE("sampling gradients see the common-random-numbers toggle") {
  CoverageSystem sys = generate_random_coverage(12, 6, 0.5, 53);
  auto f = std::make_shared<CoverageFunction>(sys);
  EstimatorConfig crn;
  crn.eps = 0.2;
  crn.p = 6;
  crn.d = 6;
  crn.seed = 9;
  EstimatorConfig indep = crn;
  indep.common_random_numbers = false;

  Objective a = make_blackbox_objective(f, crn);
  Objective b = make_blackbox_objective(f, indep);
  Point x = random_point(6, 88);
  std::vector<int> coords{0, 1, 2, 3, 4, 5};
  std::vector<double> ga = a.F->grad_batch(x, coords);
  std::vector<double> gb = b.F->grad_batch(x, coords);
  CHECK(ga != gb);  // different randomness schemes
  // Both near the exact gradient.
  Objective exact = make_coverage_objective(sys);
  std::vector<double> ge = exact.F->grad_all(x);
  for (int j = 0; j < 6; ++j) {
    CHECK(std::abs(ga[j] - ge[j]) < 0.6);
    CHECK(std::abs(gb[j] - ge[j]) < 0.6);
  }
}

TEST_CASE("oracle call accounting distinguishes closed forms from sampling") {
  CoverageSystem sys = two_sets();
  Objective exact = make_coverage_objective(sys);
  auto before = exact.counters();
  exact.F->eval_F({0.5, 0.5});
  CHECK(exact.counters().calls == before.calls + 1);  // one F query

  EstimatorConfig cfg;
  cfg.eps = 0.3;
  cfg.p = 1;
  cfg.d = 2;
  Objective sampled = make_blackbox_objective(std::make_shared<CoverageFunction>(sys), cfg);
  sampled.F->eval_F({0.5, 0.5});
  CHECK(sampled.counters().calls == cfg.sample_count());  // r calls to f
  CHECK(sampled.counters().rounds == 1);
}
