// Copyright 2026 The fiscal-duel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <random>

#include "fiscal_duel/policy.hpp"
#include "support.hpp"

using namespace fiscal_duel;
using fiscal_duel::testing::baseline;
using fiscal_duel::testing::baseline_exact;
using fiscal_duel::testing::thrown_code;

namespace {

CentralTaxes<double> taxes(double g1, double g2) { return {g1, g2}; }

ModelParams<double> random_params(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double rl = 1 + 99 * unit(rng);
  const double rh = rl + (100 - rl) * unit(rng) + 1e-6;
  return {rl, rh, 1.0 - unit(rng)};  // q in (0, 1]
}

}  // namespace

TEST_CASE("regime choice of the favored jurisdiction") {
  const auto p = baseline();
  auto c = j1_regime_choice(p, taxes(40, 55));
  CHECK(c.regime == Regime::kBargain);
  CHECK_NEAR(c.j1_payoff_bargain, 6.0);
  CHECK_NEAR(c.j1_payoff_post, 6.0);

  c = j1_regime_choice(p, taxes(40, 60));
  CHECK(c.regime == Regime::kPost);
  CHECK_NEAR(c.j1_payoff_bargain, 6.0);
  CHECK_NEAR(c.j1_payoff_post, 8.0);

  c = j1_regime_choice(p, taxes(0, 20));
  CHECK(c.regime == Regime::kBargain);
  CHECK_NEAR(c.j1_payoff_bargain, 20.0);
  CHECK_NEAR(c.j1_payoff_post, 20.0);

  const auto eq = stage_two_equilibrium(p, taxes(40, 60));
  CHECK(eq.outcome.profile == RegimeProfile{Regime::kPost, Regime::kPost});
  CHECK_NEAR(eq.outcome.expected_welfare, 24.0);
}

TEST_CASE("optimal central taxes") {
  auto r = optimal_central_taxes(baseline());
  CHECK(r.optimal_taxes.g1 == 40);
  CHECK(r.optimal_taxes.g2 == 55);
  CHECK(r.j1_regime == Regime::kBargain);
  CHECK(r.attracts == Attracts::kBothTypes);
  CHECK(r.both_types_region);
  CHECK_NEAR(r.expected_welfare, 46.0);

  r = optimal_central_taxes(ModelParams<double>{40, 70, 0.0});
  CHECK(r.optimal_taxes.g1 == 40);
  CHECK(r.optimal_taxes.g2 == 55);
  CHECK_NEAR(r.expected_welfare, 40.0);

  r = optimal_central_taxes(ModelParams<double>{10, 100, 0.5});
  CHECK_FALSE(r.both_types_region);
  CHECK(r.attracts == Attracts::kHighOnly);
  CHECK(r.optimal_taxes.g1 == 100);
  CHECK(r.optimal_taxes.g2 == 100);
  CHECK_NEAR(r.expected_welfare, 50.0);

  const auto exact = optimal_central_taxes(baseline_exact());
  CHECK(exact.optimal_taxes.g2 == Rational(55));
  CHECK(exact.expected_welfare == Rational(46));
}

TEST_CASE("the optimum is an equilibrium of the downstream game") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    const auto p = random_params(rng);
    const auto r = optimal_central_taxes(p);
    if (r.attracts != Attracts::kBothTypes) continue;
    const auto eq = stage_two_equilibrium(p, r.optimal_taxes);
    CHECK(eq.choice.regime == Regime::kBargain);
    CHECK_NEAR(eq.outcome.expected_welfare, r.expected_welfare);
  }
}

TEST_CASE("weak competition destroys welfare") {
  const auto p = baseline();
  const double g1 = p.r_low;
  const double threshold = conflict_threshold(p, g1);
  CHECK(threshold == 55);
  const double best = optimal_central_taxes(p).expected_welfare;
  for (double g2 : {55.5, 56.0, 60.0, 65.0, 70.0}) {
    const auto eq = stage_two_equilibrium(p, taxes(g1, g2));
    CHECK(eq.choice.regime == Regime::kPost);
    CHECK_NEAR(eq.outcome.expected_welfare, p.q * g2);
    CHECK(eq.outcome.expected_welfare < best);
  }
  const auto tie = stage_two_equilibrium(p, taxes(g1, 55.0));
  CHECK(tie.choice.regime == Regime::kBargain);
  CHECK_NEAR(tie.outcome.expected_welfare, 46.0);
}

TEST_CASE("threshold matches a scan when the favored tax equals the low rent") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const auto p = random_params(rng);
    const double g1 = p.r_low;
    const double threshold = conflict_threshold(p, g1);
    double last_bargain = g1;
    const int steps = 2000;
    for (int k = 0; k <= steps; ++k) {
      const double g2 = g1 + (p.r_high - g1) * k / steps;
      if (j1_regime_choice(p, taxes(g1, g2)).regime == Regime::kBargain) last_bargain = g2;
    }
    CHECK(last_bargain <= threshold + 1e-9 * p.r_high);
    CHECK(last_bargain >= threshold - (p.r_high - g1) / steps - 1e-9 * p.r_high);
  }
}

TEST_CASE("threshold formula away from the low rent") {
  const auto p = baseline();
  CHECK(conflict_threshold(p, 0.0) == 35);
  // The formula is not the scan boundary here: J1 already posts for g2 just
  // above 20, where the cap binds in both regimes and posting earns more.
  double first_post = -1;
  for (int k = 0; k <= 1400; ++k) {
    const double g2 = k * 0.05;
    if (j1_regime_choice(p, taxes(0.0, g2)).regime == Regime::kPost) {
      first_post = g2;
      break;
    }
  }
  CHECK(first_post == doctest::Approx(20.05));
  CHECK(thrown_code([&] { conflict_threshold(p, 41.0); }) == ErrorCode::kPreconditionG1);
}

TEST_CASE("scenario welfare") {
  auto w = scenario_welfare(baseline());
  CHECK_NEAR(w.scenario_i, 46.0);
  CHECK_NEAR(w.scenario_ii, 46.0);
  CHECK_NEAR(w.scenario_iii, 40.0);
  CHECK_NEAR(w.central_only_posting, 40.0);
  CHECK_NEAR(w.central_only_bargaining, 26.0);
  CHECK(w.local_only == 0);
  auto check = dominance_check(baseline());
  CHECK(check.holds);
  CHECK(check.strict);

  w = scenario_welfare(ModelParams<double>{40, 70, 0.0});
  CHECK_NEAR(w.scenario_i, 40.0);
  CHECK_NEAR(w.scenario_iii, 40.0);
  CHECK_NEAR(w.central_only_bargaining, 20.0);
  check = dominance_check(ModelParams<double>{40, 70, 0.0});
  CHECK(check.holds);
  CHECK_FALSE(check.strict);

  w = scenario_welfare(ModelParams<double>{10, 100, 0.5});
  CHECK_NEAR(w.scenario_i, 50.0);
  CHECK_NEAR(w.scenario_iii, 50.0);
  check = dominance_check(ModelParams<double>{10, 100, 0.5});
  CHECK(check.holds);
  CHECK_FALSE(check.strict);

  check = dominance_check(ModelParams<double>{10, 100, 1.0});
  CHECK(check.holds);
  CHECK_FALSE(check.strict);
}

TEST_CASE("scenario dominance on random draws") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 1000; ++i) {
    const auto p = random_params(rng);
    const auto w = scenario_welfare(p);
    CHECK(w.scenario_i == w.scenario_ii);
    CHECK(leq(w.scenario_iii, w.scenario_i));
    CHECK(leq(w.central_only_posting, w.scenario_i));
    CHECK(leq(w.central_only_bargaining, w.scenario_i));
    if (both_types_region(p)) CHECK_NEAR(w.scenario_ii - w.central_only_bargaining, p.r_low / 2);
  }
}

TEST_CASE("scaling leaves choices unchanged and scales welfare") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 300; ++i) {
    const auto p = random_params(rng);
    const double lambda = 0.1 + 10 * unit(rng);
    const ModelParams<double> s{p.r_low * lambda, p.r_high * lambda, p.q};
    const double g1 = p.r_low * unit(rng), g2 = g1 + (p.r_high - g1) * unit(rng);
    const auto a = stage_two_equilibrium(p, taxes(g1, g2));
    const auto b = stage_two_equilibrium(s, taxes(g1 * lambda, g2 * lambda));
    // Skip draws within rounding of a payoff tie.
    if (std::fabs(a.choice.j1_payoff_bargain - a.choice.j1_payoff_post) > 1e-6 * p.r_high) {
      CHECK(a.choice.regime == b.choice.regime);
    }
    CHECK(b.outcome.expected_welfare ==
          doctest::Approx(lambda * a.outcome.expected_welfare).epsilon(1e-9));
    const auto ra = optimal_central_taxes(p), rb = optimal_central_taxes(s);
    CHECK(ra.attracts == rb.attracts);
    CHECK(rb.expected_welfare == doctest::Approx(lambda * ra.expected_welfare).epsilon(1e-9));
  }
}
