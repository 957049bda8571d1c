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


// Fixtures and assertions shared by the unit tests.

#ifndef FISCAL_DUEL_TESTS_SUPPORT_HPP_
#define FISCAL_DUEL_TESTS_SUPPORT_HPP_

#include <cmath>
#include <functional>

#include "doctest.h"
#include "fiscal_duel/error.hpp"
#include "fiscal_duel/model.hpp"
#include "fiscal_duel/numeric.hpp"

namespace fiscal_duel::testing {

inline ModelParams<double> baseline() { return {40.0, 70.0, 0.4}; }

inline ModelParams<Rational> baseline_exact() {
  return {Rational(40), Rational(70), Rational(2, 5)};
}

inline double tau(double a, double b = 0.0) {
  return kRelTol * std::max({1.0, std::fabs(a), std::fabs(b)});
}

// Returns the code of the Error thrown by fn, or kInternal with a failed
// check when nothing (or something else) is thrown.
inline ErrorCode thrown_code(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  } catch (...) {
    FAIL_CHECK("unexpected exception type");
    return ErrorCode::kInternal;
  }
  FAIL_CHECK("no exception thrown");
  return ErrorCode::kInternal;
}

}  // namespace fiscal_duel::testing

#define CHECK_NEAR(a, b) CHECK(std::fabs((a) - (b)) <= ::fiscal_duel::testing::tau((a), (b)))

#endif  // FISCAL_DUEL_TESTS_SUPPORT_HPP_
