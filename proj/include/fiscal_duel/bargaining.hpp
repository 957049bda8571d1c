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


// Bargaining between an arriving MNC and the jurisdictions.
//
// Closed forms are the patient (delta -> 1) limits: a two-party Rubinstein
// game in which only the MNC holds an outside option, and the three-party
// game in which the MNC alternates offers between the two jurisdictions.
// rubinstein_delta_oracle solves the finite-discount alternating-offer game
// directly and is used to certify the limits.

#ifndef FISCAL_DUEL_BARGAINING_HPP_
#define FISCAL_DUEL_BARGAINING_HPP_

#include <cstddef>
#include <vector>

#include "fiscal_duel/numeric.hpp"

namespace fiscal_duel {

template <class Scalar>
struct BargainSplit {
  Scalar mnc_payoff{0};
  Scalar j1_payoff{0};
  Scalar j2_payoff{0};
  bool agreement = false;  // false: the MNC takes its outside option
};

enum class Proposer { kMnc, kJurisdiction };

// Strictly increasing discount factors in (0, 1).
class DiscountSchedule {
 public:
  // Throws Error(kValidationError) unless the factors are strictly
  // increasing and inside (0, 1).
  explicit DiscountSchedule(std::vector<double> deltas);

  static DiscountSchedule standard() { return DiscountSchedule({0.9, 0.99, 0.999}); }

  const std::vector<double>& deltas() const { return deltas_; }

 private:
  std::vector<double> deltas_;
};

inline constexpr double kBargainTol = 1e-12;
inline constexpr std::size_t kBargainIterationCap = 1'000'000;

// Two-party split of s1 with the MNC holding `outside`. Negative outside
// options are floored at zero (participation). When the floored option
// exceeds the pie, or the pie is negative, there is no agreement.
template <class Scalar>
BargainSplit<Scalar> rubinstein_outside(const Scalar& s1, const Scalar& outside);

// Three-party split: the MNC bargains with the favored jurisdiction over s1
// using the surplus s2 in the other jurisdiction as its outside option.
// Requires s1 >= s2; throws Error(kPreconditionOrder) otherwise.
template <class Scalar>
BargainSplit<Scalar> three_party_bargain(const Scalar& s1, const Scalar& s2);

// Subgame-perfect split of the alternating-offer game at discount factor
// delta, where the MNC may opt out (collecting `outside`) whenever it
// responds to an offer. Solved by iterating the stationary value equations
//   y = max(delta * x, outside),  x = s1 - delta * (s1 - y)
// where x (y) is the MNC's value when it (the jurisdiction) proposes.
// Throws Error(kValidationError) on bad inputs, Error(kNoConvergence) if
// the iteration cap is hit.
BargainSplit<double> rubinstein_delta_oracle(double s1, double outside,
                                             double delta,
                                             Proposer first_proposer);

extern template BargainSplit<double> rubinstein_outside(const double&,
                                                        const double&);
extern template BargainSplit<Rational> rubinstein_outside(const Rational&,
                                                          const Rational&);
extern template BargainSplit<double> three_party_bargain(const double&,
                                                         const double&);
extern template BargainSplit<Rational> three_party_bargain(const Rational&,
                                                           const Rational&);

}  // namespace fiscal_duel

#endif  // FISCAL_DUEL_BARGAINING_HPP_
