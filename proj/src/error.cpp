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


#include "fiscal_duel/error.hpp"

namespace fiscal_duel {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNonPositiveRent: return "NonPositiveRent";
    case ErrorCode::kRentOrder: return "RentOrder";
    case ErrorCode::kProbabilityRange: return "ProbabilityRange";
    case ErrorCode::kTaxRange: return "TaxRange";
    case ErrorCode::kRentExceedsProfit: return "RentExceedsProfit";
    case ErrorCode::kPreconditionOrder: return "PreconditionOrder";
    case ErrorCode::kPreconditionG1: return "PreconditionG1";
    case ErrorCode::kNegativeSelection: return "NegativeSelection";
    case ErrorCode::kNoConvergence: return "NoConvergence";
    case ErrorCode::kNoEquilibrium: return "NoEquilibrium";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kValidationError: return "ValidationError";
    case ErrorCode::kMissingField: return "MissingField";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Unknown";
}

bool is_input_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNoConvergence:
    case ErrorCode::kNoEquilibrium:
    case ErrorCode::kInternal:
      return false;
    default:
      return true;
  }
}

}  // namespace fiscal_duel
