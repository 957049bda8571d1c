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


#ifndef FISCAL_DUEL_ERROR_HPP_
#define FISCAL_DUEL_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace fiscal_duel {

enum class ErrorCode {
  kNonPositiveRent,
  kRentOrder,
  kProbabilityRange,
  kTaxRange,
  kRentExceedsProfit,
  kPreconditionOrder,
  kPreconditionG1,
  kNegativeSelection,
  kNoConvergence,
  kNoEquilibrium,
  kParseError,
  kValidationError,
  kMissingField,
  kInternal,
};

std::string_view error_code_name(ErrorCode code);

// True for codes caused by bad user input (as opposed to solver bugs).
bool is_input_error(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code), cause_(code) {}
  Error(ErrorCode code, const std::string& message, ErrorCode cause)
      : std::runtime_error(message), code_(code), cause_(cause) {}

  ErrorCode code() const noexcept { return code_; }
  // The underlying invariant when code() is a wrapper such as
  // kValidationError; equal to code() otherwise.
  ErrorCode cause() const noexcept { return cause_; }

 private:
  ErrorCode code_;
  ErrorCode cause_;
};

}  // namespace fiscal_duel

#endif  // FISCAL_DUEL_ERROR_HPP_
