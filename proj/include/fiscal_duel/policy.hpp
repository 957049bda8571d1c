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


// Stage 2 (J1's regime choice), stage 1 (central optimum) and the welfare
// comparison across institutional scenarios.

#ifndef FISCAL_DUEL_POLICY_HPP_
#define FISCAL_DUEL_POLICY_HPP_

#include <string_view>

#include "fiscal_duel/subgame.hpp"

namespace fiscal_duel {

template <class Scalar>
struct RegimeChoice {
  Regime regime;
  Scalar j1_payoff_bargain;
  Scalar j1_payoff_post;
};

// J1 compares its expected payoff from bargaining (J2's choice is payoff
// irrelevant once J2's posted tax is zero) with posting. Ties bargain.
template <class Scalar>
RegimeChoice<Scalar> j1_regime_choice(const ModelParams<Scalar>& p,
                                      const CentralTaxes<Scalar>& g);

template <class Scalar>
struct StageTwoEquilibrium {
  RegimeChoice<Scalar> choice;
  SubgameOutcome<Scalar> outcome;  // (b, b) if J1 bargains, else (p, p)
};

template <class Scalar>
StageTwoEquilibrium<Scalar> stage_two_equilibrium(const ModelParams<Scalar>& p,
                                                  const CentralTaxes<Scalar>& g);

enum class Attracts { kBothTypes, kHighOnly };
std::string_view attracts_name(Attracts attracts);

template <class Scalar>
struct PolicyResult {
  CentralTaxes<Scalar> optimal_taxes;
  Regime j1_regime;
  Attracts attracts;
  Scalar expected_welfare;
  bool both_types_region;
};

// Best welfare from attracting both types: q (r_high + r_low) / 2 +
// (1 - q) r_low.
template <class Scalar>
Scalar welfare_both_types(const ModelParams<Scalar>& p) {
  return p.q * (p.r_high + p.r_low) / 2 + (Scalar(1) - p.q) * p.r_low;
}

template <class Scalar>
Scalar welfare_high_only(const ModelParams<Scalar>& p) {
  return p.q * p.r_high;
}

// (r_low, (r_high + r_low) / 2) when attracting both types is best (ties
// included), otherwise (r_high, r_high) attracting only the high type.
template <class Scalar>
PolicyResult<Scalar> optimal_central_taxes(const ModelParams<Scalar>& p);

// (r_high + g1) / 2. At g1 = r_low this is the largest g2 for which J1
// still bargains; above it, J1 posts g2 - g1 for the high type only.
// Throws Error(kPreconditionG1) for g1 > r_low.
template <class Scalar>
Scalar conflict_threshold(const ModelParams<Scalar>& p, const Scalar& g1);

template <class Scalar>
struct ScenarioWelfare {
  Scalar scenario_i;    // jurisdictions choose their regime freely
  Scalar scenario_ii;   // bargaining only
  Scalar scenario_iii;  // posting only
  Scalar central_only_posting;
  Scalar central_only_bargaining;
  Scalar local_only;
};

template <class Scalar>
ScenarioWelfare<Scalar> scenario_welfare(const ModelParams<Scalar>& p);

struct DominanceCheck {
  bool holds;   // free choice weakly dominates posting only
  bool strict;  // ... by more than the tolerance
};

template <class Scalar>
DominanceCheck dominance_check(const ModelParams<Scalar>& p);

#define FISCAL_DUEL_POLICY_EXTERN(S)                                          \
  extern template RegimeChoice<S> j1_regime_choice(const ModelParams<S>&,     \
                                                   const CentralTaxes<S>&);   \
  extern template StageTwoEquilibrium<S> stage_two_equilibrium(               \
      const ModelParams<S>&, const CentralTaxes<S>&);                         \
  extern template PolicyResult<S> optimal_central_taxes(const ModelParams<S>&); \
  extern template S conflict_threshold(const ModelParams<S>&, const S&);      \
  extern template ScenarioWelfare<S> scenario_welfare(const ModelParams<S>&); \
  extern template DominanceCheck dominance_check(const ModelParams<S>&);

FISCAL_DUEL_POLICY_EXTERN(double)
FISCAL_DUEL_POLICY_EXTERN(Rational)
#undef FISCAL_DUEL_POLICY_EXTERN

}  // namespace fiscal_duel

#endif  // FISCAL_DUEL_POLICY_HPP_
