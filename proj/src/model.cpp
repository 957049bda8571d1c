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


#include "fiscal_duel/model.hpp"

#include <string>

namespace fiscal_duel {
namespace {

template <class Scalar>
std::string show(const Scalar& x) {
  if constexpr (std::is_same_v<Scalar, double>) {
    return format_double(x);
  } else {
    return format_rational(x);
  }
}

}  // namespace

template <class Scalar>
ModelParams<Scalar> validate_params(const ModelParams<Scalar>& raw) {
  if (!(raw.r_low > 0)) {
    throw Error(ErrorCode::kNonPositiveRent,
                "r_low must be positive, got " + show(raw.r_low));
  }
  if (!(raw.r_high > raw.r_low)) {
    throw Error(ErrorCode::kRentOrder, "r_high (" + show(raw.r_high) +
                                           ") must exceed r_low (" +
                                           show(raw.r_low) + ")");
  }
  if (!(raw.q >= 0 && raw.q <= 1)) {
    throw Error(ErrorCode::kProbabilityRange,
                "q must lie in [0, 1], got " + show(raw.q));
  }
  return raw;
}

template <class Scalar>
CanonicalTaxes<Scalar> canonicalize_taxes(const ModelParams<Scalar>& p,
                                          const CentralTaxes<Scalar>& raw) {
  CanonicalTaxes<Scalar> out{raw, false};
  if (raw.g1 > raw.g2) {
    out.taxes = {raw.g2, raw.g1};
    out.swapped = true;
  }
  if (!(out.taxes.g1 >= 0 && out.taxes.g2 <= p.r_high)) {
    throw Error(ErrorCode::kTaxRange,
                "central taxes must satisfy 0 <= g <= r_high, got (" +
                    show(raw.g1) + ", " + show(raw.g2) + ")");
  }
  return out;
}

template <class Scalar>
bool both_types_region(const ModelParams<Scalar>& p) {
  // Cross-multiplied to stay exact in rational mode.
  return p.q * (p.r_high + p.r_low) < 2 * p.r_low;
}

template <class Scalar>
LocationalRent<Scalar> locational_rent(const RentProfile<Scalar>& rp) {
  if (!(rp.profit_abroad >= 0 && rp.profit_home >= 0)) {
    throw Error(ErrorCode::kRentExceedsProfit,
                "profits must be nonnegative, got home " +
                    show(rp.profit_home) + " abroad " + show(rp.profit_abroad));
  }
  Scalar rent = rp.profit_home - rp.profit_abroad;
  Scalar rate = rp.profit_home > 0 ? Scalar(rent / rp.profit_home) : Scalar(0);
  return {rent, rate};
}

template ModelParams<double> validate_params(const ModelParams<double>&);
template ModelParams<Rational> validate_params(const ModelParams<Rational>&);
template CanonicalTaxes<double> canonicalize_taxes(const ModelParams<double>&,
                                                   const CentralTaxes<double>&);
template CanonicalTaxes<Rational> canonicalize_taxes(
    const ModelParams<Rational>&, const CentralTaxes<Rational>&);
template bool both_types_region(const ModelParams<double>&);
template bool both_types_region(const ModelParams<Rational>&);
template LocationalRent<double> locational_rent(const RentProfile<double>&);
template LocationalRent<Rational> locational_rent(const RentProfile<Rational>&);

}  // namespace fiscal_duel
