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


// Run configuration: a small strict key-value document.
//
//   # baseline economy
//   r_low = 40
//   r_high = 70
//   q = 0.4
//   g1 = 40                  # optional, with g2
//   g2 = 55
//   profile = "bp"           # bb | bp | pb | pp
//   t2_selection = 0
//   arithmetic = "rational"  # or "double" (default)
//   seed = 7
//
//   [oracle]
//   grid_step = 0.5          # default r_low / 200
//   deltas = [0.9, 0.99, 0.999]
//   max_candidates = 1000000
//   random_points = 0
//
//   [sweep]                  # [start, stop, step]; unlisted keys stay fixed
//   q = [0, 1, 0.1]
//   g2 = [40, 70, 5]
//
//   [report]
//   g1 = 40                  # default r_low
//   step = 0.5               # default grid_step
//
//   [output]
//   format = "csv"           # or "jsonl"
//   path = "out.csv"
//
// Unknown keys and sections are rejected.

#ifndef FISCAL_DUEL_CONFIG_HPP_
#define FISCAL_DUEL_CONFIG_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fiscal_duel/oracle.hpp"

namespace fiscal_duel {

enum class OutputFormat { kCsv, kJsonLines };
enum class Arithmetic { kDouble, kRational };

struct RangeSpec {
  Rational start;
  Rational stop;
  Rational step;

  // start, start + step, ... up to stop inclusive.
  std::vector<Rational> points() const;
};

struct SweepSpec {
  std::optional<RangeSpec> r_low;
  std::optional<RangeSpec> r_high;
  std::optional<RangeSpec> q;
  std::optional<RangeSpec> g1;
  std::optional<RangeSpec> g2;
};

struct OutputSpec {
  OutputFormat format = OutputFormat::kCsv;
  std::string path;  // empty: standard output
};

struct ReportSpec {
  std::optional<Rational> g1;
  std::optional<Rational> step;
};

struct RunConfig {
  ModelParams<Rational> params;
  std::optional<CentralTaxes<Rational>> taxes;  // as written, maybe g1 > g2
  std::optional<RegimeProfile> regime_profile;
  Rational t2_selection{0};
  Arithmetic arithmetic = Arithmetic::kDouble;
  std::uint64_t seed = 0;
  OracleConfig oracle;
  std::size_t random_points = 0;
  std::optional<SweepSpec> sweep;
  ReportSpec report;
  OutputSpec output;

  ModelParams<double> params_double() const;
};

// Throws Error(kParseError) with a line number for malformed or unknown
// entries and Error(kValidationError) (cause set to the violated invariant)
// for values that break the model's invariants.
RunConfig parse_config(std::string_view source);

// Re-checks derived fields after programmatic edits (e.g. a grid-step
// override). Throws like parse_config.
void validate_config(const RunConfig& cfg);

OutputFormat parse_output_format(std::string_view text);

}  // namespace fiscal_duel

#endif  // FISCAL_DUEL_CONFIG_HPP_
