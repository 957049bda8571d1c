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


#include "fiscal_duel/subgame.hpp"

#include <string>

#include "fiscal_duel/bargaining.hpp"
#include "fiscal_duel/error.hpp"

namespace fiscal_duel {

RegimeProfile parse_regime_profile(std::string_view text) {
  auto regime = [&](char c) {
    switch (c) {
      case 'b': case 'B': return Regime::kBargain;
      case 'p': case 'P': return Regime::kPost;
      default:
        throw Error(ErrorCode::kParseError,
                    "regime profile must be one of bb, bp, pb, pp; got '" +
                        std::string(text) + "'");
    }
  };
  std::string compact;
  for (char c : text) {
    if (c != ',' && c != ' ' && c != '(' && c != ')') compact.push_back(c);
  }
  if (compact.size() != 2) regime('?');
  return {regime(compact[0]), regime(compact[1])};
}

std::string_view regime_profile_name(RegimeProfile profile) {
  if (profile.j1 == Regime::kBargain) {
    return profile.j2 == Regime::kBargain ? "bb" : "bp";
  }
  return profile.j2 == Regime::kBargain ? "pb" : "pp";
}

std::string_view regime_name(Regime regime) {
  return regime == Regime::kBargain ? "bargain" : "post";
}

std::string_view location_name(Location location) {
  switch (location) {
    case Location::kJ1: return "j1";
    case Location::kJ2: return "j2";
    case Location::kAbroad: return "abroad";
  }
  return "?";
}

namespace {

template <class Scalar>
void require_region(const ModelParams<Scalar>& p, const CentralTaxes<Scalar>& g) {
  if (g.g1 > g.g2) {
    throw Error(ErrorCode::kPreconditionOrder,
                "subgame solvers need canonical taxes g1 <= g2");
  }
  if (g.g1 > p.r_low) {
    throw Error(ErrorCode::kPreconditionG1,
                "closed forms need g1 <= r_low");
  }
}

template <class Scalar>
TypeOutcome<Scalar> settle_in_j1(const Scalar& r, const Scalar& g1,
                                 const Scalar& tax) {
  TypeOutcome<Scalar> out;
  out.location = Location::kJ1;
  out.jurisdiction_tax = tax;
  out.mnc_payoff = max_of(Scalar(r - g1 - tax), Scalar(0));
  out.j1_payoff = tax;
  out.realized_welfare = tax + g1;
  return out;
}

template <class Scalar>
void fill_expectations(SubgameOutcome<Scalar>& out, const ModelParams<Scalar>& p) {
  auto e = expected_over_types(out.low, out.high, p);
  out.expected_j1 = e.expected_j1;
  out.expected_j2 = e.expected_j2;
  out.expected_welfare = e.expected_welfare;
}

// Shared by (p, b) and (p, p): J2 is undercut and posts or settles at zero,
// so J1 faces the aggregate cost g2 in the other jurisdiction.
template <class Scalar>
SubgameOutcome<Scalar> solve_posting_leader(const ModelParams<Scalar>& p,
                                            const CentralTaxes<Scalar>& g,
                                            RegimeProfile profile) {
  const Scalar gap = g.g2 - g.g1;
  const Scalar s_low = surplus(p.r_low, g.g1);
  Scalar t1 = gap;
  if (g.g2 > p.r_low) {
    // The low type's participation binds before J2's competition does:
    // either extract it fully from both types, or only undercut J2 for the
    // high type. Ties go to attracting both.
    t1 = leq(Scalar(p.q * gap), s_low) ? s_low : gap;
  }

  SubgameOutcome<Scalar> out;
  out.profile = profile;
  out.posted_taxes = std::make_pair(t1, Scalar(0));
  const Scalar cost1 = g.g1 + t1;
  for (MncType type : {MncType::kLow, MncType::kHigh}) {
    const Scalar& r = rent(p, type);
    TypeOutcome<Scalar>& slot = type == MncType::kHigh ? out.high : out.low;
    // Cost in J1 never exceeds g2 here, so J1 wins every location tie.
    if (leq(cost1, r)) slot = settle_in_j1(r, g.g1, t1);
  }
  fill_expectations(out, p);
  return out;
}

}  // namespace

template <class Scalar>
Expectation<Scalar> expected_over_types(const TypeOutcome<Scalar>& low,
                                        const TypeOutcome<Scalar>& high,
                                        const ModelParams<Scalar>& p) {
  const Scalar wl = Scalar(1) - p.q;
  return {p.q * high.j1_payoff + wl * low.j1_payoff,
          p.q * high.j2_payoff + wl * low.j2_payoff,
          p.q * high.realized_welfare + wl * low.realized_welfare};
}

template <class Scalar>
SubgameOutcome<Scalar> solve_bp(const ModelParams<Scalar>& p,
                                const CentralTaxes<Scalar>& g,
                                const Scalar& t2_selection) {
  require_region(p, g);
  if (t2_selection < 0) {
    throw Error(ErrorCode::kNegativeSelection, "J2's posted tax must be >= 0");
  }
  SubgameOutcome<Scalar> out;
  out.profile = {Regime::kBargain, Regime::kPost};
  const Scalar cap = t2_selection + g.g2 - g.g1;
  for (MncType type : {MncType::kLow, MncType::kHigh}) {
    const Scalar& r = rent(p, type);
    const Scalar tax = min_of(Scalar(surplus(r, g.g1) / 2), cap);
    (type == MncType::kHigh ? out.high : out.low) = settle_in_j1(r, g.g1, tax);
  }
  fill_expectations(out, p);
  return out;
}

template <class Scalar>
SubgameOutcome<Scalar> solve_pb(const ModelParams<Scalar>& p,
                                const CentralTaxes<Scalar>& g) {
  if (!(g.g1 < g.g2)) {
    throw Error(ErrorCode::kPreconditionOrder,
                "(p, b) needs g1 < g2; equal taxes belong to (b, p)");
  }
  require_region(p, g);
  return solve_posting_leader(p, g, {Regime::kPost, Regime::kBargain});
}

template <class Scalar>
SubgameOutcome<Scalar> solve_pp(const ModelParams<Scalar>& p,
                                const CentralTaxes<Scalar>& g) {
  require_region(p, g);
  return solve_posting_leader(p, g, {Regime::kPost, Regime::kPost});
}

template <class Scalar>
SubgameOutcome<Scalar> solve_bb(const ModelParams<Scalar>& p,
                                const CentralTaxes<Scalar>& g) {
  require_region(p, g);
  SubgameOutcome<Scalar> out;
  out.profile = {Regime::kBargain, Regime::kBargain};
  for (MncType type : {MncType::kLow, MncType::kHigh}) {
    const Scalar& r = rent(p, type);
    const BargainSplit<Scalar> split =
        three_party_bargain(surplus(r, g.g1), surplus(r, g.g2));
    if (split.agreement) {
      (type == MncType::kHigh ? out.high : out.low) =
          settle_in_j1(r, g.g1, split.j1_payoff);
    }
  }
  fill_expectations(out, p);
  return out;
}

template <class Scalar>
SubgameOutcome<Scalar> solve_subgame(const ModelParams<Scalar>& p,
                                     const CentralTaxes<Scalar>& g,
                                     RegimeProfile profile,
                                     const Scalar& t2_selection) {
  if (profile.j1 == Regime::kBargain) {
    return profile.j2 == Regime::kBargain ? solve_bb(p, g)
                                          : solve_bp(p, g, t2_selection);
  }
  return profile.j2 == Regime::kBargain ? solve_pb(p, g) : solve_pp(p, g);
}

#define FISCAL_DUEL_SUBGAME_INSTANTIATE(S)                                    \
  template Expectation<S> expected_over_types(                                \
      const TypeOutcome<S>&, const TypeOutcome<S>&, const ModelParams<S>&);   \
  template SubgameOutcome<S> solve_bp(const ModelParams<S>&,                  \
                                      const CentralTaxes<S>&, const S&);      \
  template SubgameOutcome<S> solve_pb(const ModelParams<S>&,                  \
                                      const CentralTaxes<S>&);                \
  template SubgameOutcome<S> solve_pp(const ModelParams<S>&,                  \
                                      const CentralTaxes<S>&);                \
  template SubgameOutcome<S> solve_bb(const ModelParams<S>&,                  \
                                      const CentralTaxes<S>&);                \
  template SubgameOutcome<S> solve_subgame(                                   \
      const ModelParams<S>&, const CentralTaxes<S>&, RegimeProfile, const S&);

FISCAL_DUEL_SUBGAME_INSTANTIATE(double)
FISCAL_DUEL_SUBGAME_INSTANTIATE(Rational)

}  // namespace fiscal_duel
