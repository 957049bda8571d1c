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


#include "fiscal_duel/policy.hpp"

#include "fiscal_duel/error.hpp"

namespace fiscal_duel {

std::string_view attracts_name(Attracts attracts) {
  return attracts == Attracts::kBothTypes ? "both_types" : "high_only";
}

template <class Scalar>
RegimeChoice<Scalar> j1_regime_choice(const ModelParams<Scalar>& p,
                                      const CentralTaxes<Scalar>& g) {
  const Scalar bargain = solve_bb(p, g).expected_j1;
  const Scalar post = solve_pp(p, g).expected_j1;
  return {leq(post, bargain) ? Regime::kBargain : Regime::kPost, bargain, post};
}

template <class Scalar>
StageTwoEquilibrium<Scalar> stage_two_equilibrium(const ModelParams<Scalar>& p,
                                                  const CentralTaxes<Scalar>& g) {
  RegimeChoice<Scalar> choice = j1_regime_choice(p, g);
  return {choice, choice.regime == Regime::kBargain ? solve_bb(p, g)
                                                    : solve_pp(p, g)};
}

template <class Scalar>
PolicyResult<Scalar> optimal_central_taxes(const ModelParams<Scalar>& p) {
  const Scalar both = welfare_both_types(p);
  const Scalar high = welfare_high_only(p);
  const bool region = both_types_region(p);
  if (leq(high, both)) {
    return {{p.r_low, Scalar((p.r_high + p.r_low) / 2)},
            Regime::kBargain, Attracts::kBothTypes, both, region};
  }
  // Any pair making the high type pay r_high in total works; this one
  // leaves J1 nothing to gain from either regime.
  return {{p.r_high, p.r_high}, Regime::kBargain, Attracts::kHighOnly, high, region};
}

template <class Scalar>
Scalar conflict_threshold(const ModelParams<Scalar>& p, const Scalar& g1) {
  if (g1 > p.r_low) {
    throw Error(ErrorCode::kPreconditionG1, "conflict threshold needs g1 <= r_low");
  }
  return (p.r_high + g1) / 2;
}

template <class Scalar>
ScenarioWelfare<Scalar> scenario_welfare(const ModelParams<Scalar>& p) {
  ScenarioWelfare<Scalar> out;
  out.scenario_i = max_of(welfare_both_types(p), welfare_high_only(p));
  out.scenario_ii = out.scenario_i;
  out.scenario_iii = max_of(p.r_low, welfare_high_only(p));
  out.central_only_posting = out.scenario_iii;
  // Even split with no reservation tax.
  out.central_only_bargaining =
      (p.q * p.r_high + (Scalar(1) - p.q) * p.r_low) / 2;
  out.local_only = Scalar(0);
  return out;
}

template <class Scalar>
DominanceCheck dominance_check(const ModelParams<Scalar>& p) {
  const ScenarioWelfare<Scalar> w = scenario_welfare(p);
  return {leq(w.scenario_iii, w.scenario_i), lt(w.scenario_iii, w.scenario_i)};
}

#define FISCAL_DUEL_POLICY_INSTANTIATE(S)                                     \
  template RegimeChoice<S> j1_regime_choice(const ModelParams<S>&,            \
                                            const CentralTaxes<S>&);          \
  template StageTwoEquilibrium<S> stage_two_equilibrium(                      \
      const ModelParams<S>&, const CentralTaxes<S>&);                         \
  template PolicyResult<S> optimal_central_taxes(const ModelParams<S>&);      \
  template S conflict_threshold(const ModelParams<S>&, const S&);             \
  template ScenarioWelfare<S> scenario_welfare(const ModelParams<S>&);        \
  template DominanceCheck dominance_check(const ModelParams<S>&);

FISCAL_DUEL_POLICY_INSTANTIATE(double)
FISCAL_DUEL_POLICY_INSTANTIATE(Rational)

}  // namespace fiscal_duel
