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


#include "fiscal_duel/bargaining.hpp"

#include <cmath>
#include <string>

#include "fiscal_duel/error.hpp"

namespace fiscal_duel {

DiscountSchedule::DiscountSchedule(std::vector<double> deltas)
    : deltas_(std::move(deltas)) {
  if (deltas_.empty()) {
    throw Error(ErrorCode::kValidationError, "discount schedule is empty");
  }
  double prev = 0.0;
  for (double d : deltas_) {
    if (!(d > 0.0 && d < 1.0)) {
      throw Error(ErrorCode::kValidationError,
                  "discount factor outside (0, 1): " + format_double(d));
    }
    if (!(d > prev)) {
      throw Error(ErrorCode::kValidationError,
                  "discount schedule must be strictly increasing");
    }
    prev = d;
  }
}

template <class Scalar>
BargainSplit<Scalar> rubinstein_outside(const Scalar& s1,
                                        const Scalar& outside) {
  const Scalar option = max_of(outside, Scalar(0));
  BargainSplit<Scalar> split;
  if (s1 < 0 || option > s1) {
    split.mnc_payoff = option;
    return split;
  }
  split.agreement = true;
  split.mnc_payoff = max_of(Scalar(s1 / 2), option);
  split.j1_payoff = s1 - split.mnc_payoff;
  return split;
}

template <class Scalar>
BargainSplit<Scalar> three_party_bargain(const Scalar& s1, const Scalar& s2) {
  if (s1 < s2) {
    throw Error(ErrorCode::kPreconditionOrder,
                "three-party bargaining needs the favored surplus to be the "
                "larger one");
  }
  BargainSplit<Scalar> split;
  if (s1 < 0) return split;
  split.agreement = true;
  split.mnc_payoff = max_of(Scalar(s1 / 2), max_of(s2, Scalar(0)));
  split.j1_payoff = s1 - split.mnc_payoff;
  return split;
}

BargainSplit<double> rubinstein_delta_oracle(double s1, double outside,
                                             double delta,
                                             Proposer first_proposer) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw Error(ErrorCode::kValidationError,
                "discount factor outside (0, 1): " + format_double(delta));
  }
  if (!(s1 >= 0.0) || !std::isfinite(s1) || !std::isfinite(outside)) {
    throw Error(ErrorCode::kValidationError,
                "finite nonnegative pie required, got " + format_double(s1));
  }
  const double option = std::max(outside, 0.0);
  BargainSplit<double> split;
  if (option > s1) {
    // Any acceptable offer would leave the jurisdiction with a loss.
    split.mnc_payoff = option;
    return split;
  }

  const double tol = kBargainTol * std::max(1.0, s1);
  double x = 0.0;  // MNC's value when proposing
  double y = 0.0;  // MNC's value when responding
  std::size_t it = 0;
  for (;; ++it) {
    if (it == kBargainIterationCap) {
      throw Error(ErrorCode::kNoConvergence,
                  "alternating-offer iteration did not converge");
    }
    const double y_next = std::max(delta * x, option);
    const double x_next = s1 - delta * (s1 - y_next);
    const double change = std::max(std::abs(x_next - x), std::abs(y_next - y));
    x = x_next;
    y = y_next;
    if (change <= tol * (1.0 - delta)) break;
  }

  split.agreement = true;
  split.mnc_payoff = first_proposer == Proposer::kMnc ? x : y;
  split.j1_payoff = s1 - split.mnc_payoff;
  return split;
}

template BargainSplit<double> rubinstein_outside(const double&, const double&);
template BargainSplit<Rational> rubinstein_outside(const Rational&,
                                                   const Rational&);
template BargainSplit<double> three_party_bargain(const double&, const double&);
template BargainSplit<Rational> three_party_bargain(const Rational&,
                                                    const Rational&);

}  // namespace fiscal_duel
