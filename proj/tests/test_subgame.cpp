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

#include "fiscal_duel/subgame.hpp"
#include "support.hpp"

using namespace fiscal_duel;
using fiscal_duel::testing::baseline;
using fiscal_duel::testing::baseline_exact;
using fiscal_duel::testing::thrown_code;

namespace {

CentralTaxes<double> taxes(double g1, double g2) { return {g1, g2}; }

void check_budget(const ModelParams<double>& p, const CentralTaxes<double>& g,
                  const SubgameOutcome<double>& o) {
  for (MncType type : {MncType::kLow, MncType::kHigh}) {
    const auto& t = type == MncType::kLow ? o.low : o.high;
    CHECK(t.location != Location::kJ2);
    CHECK(t.mnc_payoff >= 0);
    CHECK(t.j2_payoff == 0);
    if (t.location == Location::kJ1) {
      CHECK_NEAR(t.j1_payoff + g.g1 + t.mnc_payoff, rent(p, type));
      CHECK_NEAR(t.realized_welfare, t.j1_payoff + g.g1);
    } else {
      CHECK(t.realized_welfare == 0);
    }
  }
  CHECK(o.expected_j2 == 0);
}

void check_same(const SubgameOutcome<double>& a, const SubgameOutcome<double>& b) {
  for (auto pair : {std::pair{&a.low, &b.low}, std::pair{&a.high, &b.high}}) {
    CHECK(pair.first->location == pair.second->location);
    CHECK_NEAR(pair.first->jurisdiction_tax, pair.second->jurisdiction_tax);
    CHECK_NEAR(pair.first->mnc_payoff, pair.second->mnc_payoff);
    CHECK_NEAR(pair.first->j1_payoff, pair.second->j1_payoff);
    CHECK_NEAR(pair.first->realized_welfare, pair.second->realized_welfare);
  }
  CHECK_NEAR(a.expected_j1, b.expected_j1);
  CHECK_NEAR(a.expected_welfare, b.expected_welfare);
}

}  // namespace

TEST_CASE("regime profile names") {
  CHECK(parse_regime_profile("bp") == RegimeProfile{Regime::kBargain, Regime::kPost});
  CHECK(parse_regime_profile("p,b") == RegimeProfile{Regime::kPost, Regime::kBargain});
  CHECK(regime_profile_name({Regime::kPost, Regime::kPost}) == "pp");
  CHECK(thrown_code([] { parse_regime_profile("bx"); }) == ErrorCode::kParseError);
}

TEST_CASE("favored jurisdiction bargains, the other posts") {
  const auto p = baseline();
  auto o = solve_bp(p, taxes(40, 55));
  CHECK(o.low.jurisdiction_tax == 0);
  CHECK(o.high.jurisdiction_tax == 15);
  CHECK_NEAR(o.expected_j1, 6.0);
  CHECK_NEAR(o.expected_welfare, 46.0);
  CHECK_FALSE(o.posted_taxes.has_value());
  check_budget(p, taxes(40, 55), o);

  o = solve_bp(p, taxes(0, 0));
  CHECK(o.low.jurisdiction_tax == 0);
  CHECK(o.high.jurisdiction_tax == 0);
  CHECK(o.expected_welfare == 0);

  o = solve_bp(p, taxes(0, 20));
  CHECK(o.low.jurisdiction_tax == 20);
  CHECK(o.high.jurisdiction_tax == 20);
  CHECK_NEAR(o.expected_j1, 20.0);
  CHECK_NEAR(o.expected_welfare, 20.0);

  // A higher posted tax in J2 loosens the cap on J1's bargained tax.
  o = solve_bp(p, taxes(0, 20), 10.0);
  CHECK(o.high.jurisdiction_tax == 30);
  CHECK(o.low.jurisdiction_tax == 20);

  CHECK(thrown_code([&] { solve_bp(p, taxes(0, 20), -1.0); }) ==
        ErrorCode::kNegativeSelection);
  CHECK(thrown_code([&] { solve_bp(p, taxes(45, 50)); }) == ErrorCode::kPreconditionG1);
}

TEST_CASE("favored jurisdiction posts, the other bargains") {
  const auto p = baseline();
  auto o = solve_pb(p, taxes(10, 30));
  REQUIRE(o.posted_taxes.has_value());
  CHECK(o.posted_taxes->first == 20);
  CHECK(o.low.location == Location::kJ1);
  CHECK(o.high.location == Location::kJ1);
  CHECK_NEAR(o.expected_j1, 20.0);
  CHECK_NEAR(o.expected_welfare, 30.0);

  o = solve_pb(p, taxes(40, 55));
  CHECK(o.posted_taxes->first == 15);
  CHECK(o.low.location == Location::kAbroad);
  CHECK(o.high.location == Location::kJ1);
  CHECK_NEAR(o.expected_j1, 6.0);
  CHECK_NEAR(o.expected_welfare, 22.0);
  check_budget(p, taxes(40, 55), o);

  o = solve_pb(p, taxes(0, 55));
  CHECK(o.posted_taxes->first == 40);
  CHECK_NEAR(o.expected_j1, 40.0);
  CHECK_NEAR(o.expected_welfare, 40.0);

  CHECK(thrown_code([&] { solve_pb(p, taxes(30, 30)); }) == ErrorCode::kPreconditionOrder);
}

TEST_CASE("both post") {
  const auto p = baseline();
  auto o = solve_pp(p, taxes(0, 0));
  CHECK(o.posted_taxes->first == 0);
  CHECK(o.posted_taxes->second == 0);
  CHECK(o.expected_welfare == 0);
  o = solve_pp(p, taxes(10, 30));
  CHECK(o.posted_taxes->first == 20);
  CHECK_NEAR(o.expected_welfare, 30.0);
  o = solve_pp(p, taxes(40, 55));
  CHECK(o.posted_taxes->first == 15);
  CHECK(o.low.location == Location::kAbroad);
  CHECK_NEAR(o.expected_welfare, 22.0);

  // Knife edge s_low = q (g2 - g1) attracts both types.
  const ModelParams<double> edge{40, 70, 0.5};
  o = solve_pp(edge, taxes(20, 60));
  CHECK(o.posted_taxes->first == 20);
  CHECK(o.low.location == Location::kJ1);
}

TEST_CASE("both bargain") {
  const auto p = baseline();
  auto o = solve_bb(p, taxes(40, 55));
  CHECK_NEAR(o.expected_j1, 6.0);
  CHECK_NEAR(o.expected_welfare, 46.0);
  o = solve_bb(p, taxes(0, 0));
  CHECK(o.expected_j1 == 0);
  CHECK(o.expected_welfare == 0);
  o = solve_bb(p, taxes(0, 70));
  CHECK_NEAR(o.expected_j1, 26.0);
  CHECK_NEAR(o.expected_welfare, 26.0);
  check_budget(p, taxes(0, 70), o);
}

TEST_CASE("expectation over types") {
  const auto p = baseline();
  TypeOutcome<double> low{Location::kJ1, 0, 0, 0, 0, 40};
  TypeOutcome<double> high{Location::kJ1, 15, 15, 15, 0, 55};
  CHECK_NEAR(expected_over_types(low, high, p).expected_welfare, 46.0);
  CHECK_NEAR(expected_over_types(high, high, p).expected_welfare, 55.0);
  CHECK_NEAR(expected_over_types(low, high, ModelParams<double>{40, 70, 1.0}).expected_welfare,
             55.0);
}

TEST_CASE("randomized structural properties") {
  std::mt19937_64 rng(20261015);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 2000; ++i) {
    const double rl = 1 + 99 * unit(rng);
    const double rh = rl + (100 - rl) * unit(rng) + 1e-6;
    const ModelParams<double> p{rl, rh, unit(rng)};
    const double g1 = rl * unit(rng);
    const double g2 = g1 + (rh - g1) * unit(rng);
    const auto g = taxes(g1, g2);
    CAPTURE(rl);
    CAPTURE(rh);
    CAPTURE(g1);
    CAPTURE(g2);
    const auto bp = solve_bp(p, g), bb = solve_bb(p, g), pp = solve_pp(p, g);
    check_budget(p, g, bp);
    check_budget(p, g, bb);
    check_budget(p, g, pp);
    check_same(bp, bb);
    if (g1 < g2) check_same(solve_pb(p, g), pp);
    for (auto profile : {RegimeProfile{Regime::kBargain, Regime::kBargain},
                         RegimeProfile{Regime::kPost, Regime::kPost}}) {
      check_same(solve_subgame(p, g, profile), profile.j1 == Regime::kBargain ? bb : pp);
    }
  }
}

TEST_CASE("bargaining welfare is monotone in the central taxes") {
  const auto p = baseline();
  for (int a = 0; a <= 40; ++a) {
    const double g1 = a;
    double prev = -1;
    for (int b = a; b <= 70; ++b) {
      const double w = solve_bb(p, taxes(g1, b)).expected_welfare;
      CHECK(w >= prev - 1e-9);
      prev = w;
    }
  }
  for (double g2 = 55; g2 <= 70; g2 += 0.5) {
    double prev = -1;
    for (int a = 0; a < 40; ++a) {
      const double g1 = a;
      if (g2 < (p.r_high + g1) / 2) continue;
      const double w = solve_bb(p, taxes(g1, g2)).expected_welfare;
      CHECK(w > prev);
      prev = w;
    }
  }
}

TEST_CASE("exact arithmetic agrees with floating point") {
  const auto p = baseline_exact();
  const CentralTaxes<Rational> g{Rational(40), Rational(55)};
  const auto bb = solve_bb(p, g);
  CHECK(bb.expected_j1 == Rational(6));
  CHECK(bb.expected_welfare == Rational(46));
  const auto pp = solve_pp(p, CentralTaxes<Rational>{Rational(10), Rational(30)});
  CHECK(pp.posted_taxes->first == Rational(20));
  CHECK(pp.expected_welfare == Rational(30));
  const auto odd = solve_bb(ModelParams<Rational>{Rational(1), Rational(2), Rational(1, 3)},
                            CentralTaxes<Rational>{Rational(1, 3), Rational(1)});
  const auto odd_d = solve_bb(ModelParams<double>{1, 2, 1.0 / 3}, taxes(1.0 / 3, 1));
  CHECK(to_double(odd.expected_welfare) == doctest::Approx(odd_d.expected_welfare));
}

TEST_CASE("solvers enforce their region") {
  const auto p = baseline();
  CHECK(thrown_code([&] { solve_bb(p, taxes(50, 60)); }) == ErrorCode::kPreconditionG1);
  CHECK(thrown_code([&] { solve_pp(p, taxes(30, 20)); }) == ErrorCode::kPreconditionOrder);
}
