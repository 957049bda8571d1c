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


// Stage-2/3/4 continuation games for each regime profile. Every solver
// assumes canonical taxes (g1 <= g2) and the closed-form region g1 <= r_low;
// general-region evaluation lives in the oracle.

#ifndef FISCAL_DUEL_SUBGAME_HPP_
#define FISCAL_DUEL_SUBGAME_HPP_

#include <optional>
#include <string_view>
#include <utility>

#include "fiscal_duel/model.hpp"

namespace fiscal_duel {

enum class Regime { kBargain, kPost };

struct RegimeProfile {
  Regime j1;
  Regime j2;

  friend bool operator==(const RegimeProfile&, const RegimeProfile&) = default;
};

// "bb", "bp", "pb", "pp". Throws Error(kParseError).
RegimeProfile parse_regime_profile(std::string_view text);
std::string_view regime_profile_name(RegimeProfile profile);
std::string_view regime_name(Regime regime);

enum class Location { kJ1, kJ2, kAbroad };
std::string_view location_name(Location location);

template <class Scalar>
struct TypeOutcome {
  Location location = Location::kAbroad;
  Scalar jurisdiction_tax{0};  // local tax actually paid
  Scalar mnc_payoff{0};
  Scalar j1_payoff{0};
  Scalar j2_payoff{0};
  Scalar realized_welfare{0};  // local plus central revenue
};

template <class Scalar>
struct SubgameOutcome {
  RegimeProfile profile{Regime::kBargain, Regime::kBargain};
  TypeOutcome<Scalar> low;
  TypeOutcome<Scalar> high;
  std::optional<std::pair<Scalar, Scalar>> posted_taxes;  // (t1*, t2*)
  Scalar expected_j1{0};
  Scalar expected_j2{0};
  Scalar expected_welfare{0};

  const TypeOutcome<Scalar>& of(MncType type) const {
    return type == MncType::kHigh ? high : low;
  }
};

template <class Scalar>
struct Expectation {
  Scalar expected_j1;
  Scalar expected_j2;
  Scalar expected_welfare;
};

template <class Scalar>
Expectation<Scalar> expected_over_types(const TypeOutcome<Scalar>& low,
                                        const TypeOutcome<Scalar>& high,
                                        const ModelParams<Scalar>& p);

// J1 bargains, J2 posts t2_selection (any t2 >= 0 is an equilibrium for J2).
// Throws Error(kPreconditionG1 | kNegativeSelection).
template <class Scalar>
SubgameOutcome<Scalar> solve_bp(const ModelParams<Scalar>& p,
                                const CentralTaxes<Scalar>& g,
                                const Scalar& t2_selection = Scalar(0));

// J1 posts, J2 bargains. Requires g1 < g2.
// Throws Error(kPreconditionOrder | kPreconditionG1).
template <class Scalar>
SubgameOutcome<Scalar> solve_pb(const ModelParams<Scalar>& p,
                                const CentralTaxes<Scalar>& g);

// Both post (Bertrand). Throws Error(kPreconditionOrder | kPreconditionG1).
template <class Scalar>
SubgameOutcome<Scalar> solve_pp(const ModelParams<Scalar>& p,
                                const CentralTaxes<Scalar>& g);

// Both bargain. Throws Error(kPreconditionOrder | kPreconditionG1).
template <class Scalar>
SubgameOutcome<Scalar> solve_bb(const ModelParams<Scalar>& p,
                                const CentralTaxes<Scalar>& g);

// Dispatches on the profile. t2_selection is used only for (b, p).
template <class Scalar>
SubgameOutcome<Scalar> solve_subgame(const ModelParams<Scalar>& p,
                                     const CentralTaxes<Scalar>& g,
                                     RegimeProfile profile,
                                     const Scalar& t2_selection = Scalar(0));

#define FISCAL_DUEL_SUBGAME_EXTERN(S)                                         \
  extern template Expectation<S> expected_over_types(                         \
      const TypeOutcome<S>&, const TypeOutcome<S>&, const ModelParams<S>&);   \
  extern template SubgameOutcome<S> solve_bp(                                 \
      const ModelParams<S>&, const CentralTaxes<S>&, const S&);               \
  extern template SubgameOutcome<S> solve_pb(const ModelParams<S>&,           \
                                             const CentralTaxes<S>&);         \
  extern template SubgameOutcome<S> solve_pp(const ModelParams<S>&,           \
                                             const CentralTaxes<S>&);         \
  extern template SubgameOutcome<S> solve_bb(const ModelParams<S>&,           \
                                             const CentralTaxes<S>&);         \
  extern template SubgameOutcome<S> solve_subgame(                            \
      const ModelParams<S>&, const CentralTaxes<S>&, RegimeProfile, const S&);

FISCAL_DUEL_SUBGAME_EXTERN(double)
FISCAL_DUEL_SUBGAME_EXTERN(Rational)
#undef FISCAL_DUEL_SUBGAME_EXTERN

}  // namespace fiscal_duel

#endif  // FISCAL_DUEL_SUBGAME_HPP_
