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

#ifndef FISCAL_DUEL_NUMERIC_HPP_
#define FISCAL_DUEL_NUMERIC_HPP_

#include <algorithm>
#include <cmath>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace fiscal_duel {

// Exact arithmetic used for oracle cross-checks of the closed forms.
using Rational = boost::multiprecision::cpp_rational;

// Relative tolerance applied to every floating comparison in the closed
// forms: |a - b| <= kRelTol * max(1, |a|, |b|).
inline constexpr double kRelTol = 1e-9;

template <class Scalar>
struct NumTraits;

template <>
struct NumTraits<double> {
  static double tol(double a, double b) {
    return kRelTol * std::max({1.0, std::abs(a), std::abs(b)});
  }
  static double to_double(double x) { return x; }
};

template <>
struct NumTraits<Rational> {
  static Rational tol(const Rational&, const Rational&) { return Rational(0); }
  static double to_double(const Rational& x) {
    return x.convert_to<double>();
  }
};

template <class Scalar>
bool approx_eq(const Scalar& a, const Scalar& b) {
  Scalar d = a - b;
  if (d < 0) d = -d;
  return d <= NumTraits<Scalar>::tol(a, b);
}

// a <= b up to tolerance.
template <class Scalar>
bool leq(const Scalar& a, const Scalar& b) {
  return a <= b + NumTraits<Scalar>::tol(a, b);
}

// a < b by more than the tolerance.
template <class Scalar>
bool lt(const Scalar& a, const Scalar& b) {
  return a < b - NumTraits<Scalar>::tol(a, b);
}

template <class Scalar>
Scalar max_of(const Scalar& a, const Scalar& b) {
  return a < b ? b : a;
}

template <class Scalar>
Scalar min_of(const Scalar& a, const Scalar& b) {
  return b < a ? b : a;
}

template <class Scalar>
double to_double(const Scalar& x) {
  return NumTraits<Scalar>::to_double(x);
}

// Parses a decimal literal ("-12.5", "3", "1e-3", "7/2") exactly.
// Throws Error(kParseError) on malformed input.
Rational parse_rational(std::string_view text);

// Shortest decimal text that round-trips to the same double.
std::string format_double(double x);

// "n" or "n/d" in lowest terms.
std::string format_rational(const Rational& x);

}  // namespace fiscal_duel

#endif  // FISCAL_DUEL_NUMERIC_HPP_
