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


// Command execution and result emission for the command-line surface.

#ifndef FISCAL_DUEL_RUNNER_HPP_
#define FISCAL_DUEL_RUNNER_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "fiscal_duel/config.hpp"

namespace fiscal_duel {

enum class Command { kSolve, kSweep, kVerify, kScenarios, kReport };

// Throws Error(kParseError).
Command parse_command(std::string_view text);
std::string_view command_name(Command command);

struct Cell {
  enum class Kind { kNumber, kExact, kText, kBool, kEmpty };
  Kind kind = Kind::kEmpty;
  std::string text;     // shortest round-trip decimal for numbers
  double number = 0.0;  // kNumber only
};

Cell number_cell(double x);
Cell number_cell(const Rational& x);  // exact "n/d" text
Cell text_cell(std::string_view text);
Cell bool_cell(bool b);

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

struct RunOutput {
  Table table;
  bool oracle_mismatch = false;  // verify only
};

// Executes one command. Input problems surface as Error with
// is_input_error(code) true; the offending input is echoed in the message.
RunOutput run_command(const RunConfig& cfg, Command command);

// CSV with a header line, or one JSON object per line.
std::string render_table(const Table& table, OutputFormat format);

}  // namespace fiscal_duel

#endif  // FISCAL_DUEL_RUNNER_HPP_
