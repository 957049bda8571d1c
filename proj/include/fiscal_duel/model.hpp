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


// Primitives of the two-jurisdiction location game: MNC rents, the
// high-type arrival probability, the central government's locational taxes,
// and the profit/rent arithmetic that defines the tax base.

#ifndef FISCAL_DUEL_MODEL_HPP_
#define FISCAL_DUEL_MODEL_HPP_

#include "fiscal_duel/error.hpp"
#include "fiscal_duel/numeric.hpp"

namespace fiscal_duel {

template <class Scalar>
struct ModelParams {
  Scalar r_low;
  Scalar r_high;
  Scalar q;  // probability that the high-rent MNC shows up
};

// Central lump-sum locational taxes. After canonicalization g1 <= g2, and J1
// is called the favored jurisdiction.
template <class Scalar>
struct CentralTaxes {
  Scalar g1;
  Scalar g2;
};

template <class Scalar>
struct CanonicalTaxes {
  CentralTaxes<Scalar> taxes;
  bool swapped = false;  // true if the input had g1 > g2
};

enum class MncType { kLow, kHigh };

template <class Scalar>
const Scalar& rent(const ModelParams<Scalar>& p, MncType type) {
  return type == MncType::kHigh ? p.r_high : p.r_low;
}

// Probability weight of a type.
template <class Scalar>
Scalar type_weight(const ModelParams<Scalar>& p, MncType type) {
  return type == MncType::kHigh ? p.q : Scalar(1) - p.q;
}

// One row of the profits-vs-rents table.
template <class Scalar>
struct RentProfile {
  Scalar profit_home;    // pre-tax profit when locating in the host country
  Scalar profit_abroad;  // after-tax profit of the best location abroad
};

template <class Scalar>
struct LocationalRent {
  Scalar rent;
  Scalar optimal_profit_tax_rate;  // leaves the MNC indifferent
};

// Throws Error(kNonPositiveRent | kRentOrder | kProbabilityRange).
template <class Scalar>
ModelParams<Scalar> validate_params(const ModelParams<Scalar>& raw);

// Enforces 0 <= min(g) and max(g) <= r_high, swapping labels when g1 > g2.
// Throws Error(kTaxRange).
template <class Scalar>
CanonicalTaxes<Scalar> canonicalize_taxes(const ModelParams<Scalar>& p,
                                          const CentralTaxes<Scalar>& raw);

// Attracting both types beats attracting only the high type:
// q < 2 r_low / (r_high + r_low), strictly.
template <class Scalar>
bool both_types_region(const ModelParams<Scalar>& p);

// Size of the pie when a type with rent r locates where the central tax is g.
// Negative when the central tax alone exceeds the rent.
template <class Scalar>
Scalar surplus(const Scalar& r, const Scalar& g) {
  return r - g;
}

// Throws Error(kRentExceedsProfit) for negative outside profits or a rent
// larger than the home profit.
template <class Scalar>
LocationalRent<Scalar> locational_rent(const RentProfile<Scalar>& rp);

extern template ModelParams<double> validate_params(const ModelParams<double>&);
extern template ModelParams<Rational> validate_params(
    const ModelParams<Rational>&);
extern template CanonicalTaxes<double> canonicalize_taxes(
    const ModelParams<double>&, const CentralTaxes<double>&);
extern template CanonicalTaxes<Rational> canonicalize_taxes(
    const ModelParams<Rational>&, const CentralTaxes<Rational>&);
extern template bool both_types_region(const ModelParams<double>&);
extern template bool both_types_region(const ModelParams<Rational>&);
extern template LocationalRent<double> locational_rent(
    const RentProfile<double>&);
extern template LocationalRent<Rational> locational_rent(
    const RentProfile<Rational>&);

}  // namespace fiscal_duel

#endif  // FISCAL_DUEL_MODEL_HPP_
