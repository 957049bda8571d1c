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


#include <string>

#include "fiscal_duel/config.hpp"
#include "support.hpp"

using namespace fiscal_duel;
using fiscal_duel::testing::thrown_code;

namespace {

const char* const kMinimal = "r_low = 40\nr_high = 70\nq = 0.4\n";

Error parse_error(const std::string& text) {
  try {
    parse_config(text);
  } catch (const Error& e) {
    return e;
  }
  FAIL("parse succeeded for:\n" << text);
  return Error(ErrorCode::kInternal, "unreachable");
}

}  // namespace

TEST_CASE("minimal document gets defaults") {
  const auto cfg = parse_config(kMinimal);
  CHECK(cfg.params.r_low == 40);
  CHECK(cfg.params.r_high == 70);
  CHECK(cfg.params.q == Rational(2, 5));
  CHECK(cfg.oracle.grid_step == 0.2);
  CHECK(cfg.oracle.delta_schedule.deltas() == std::vector<double>{0.9, 0.99, 0.999});
  CHECK_FALSE(cfg.taxes.has_value());
  CHECK_FALSE(cfg.regime_profile.has_value());
  CHECK_FALSE(cfg.sweep.has_value());
  CHECK(cfg.arithmetic == Arithmetic::kDouble);
  CHECK(cfg.output.format == OutputFormat::kCsv);
  CHECK(cfg.output.path.empty());
  CHECK(cfg.t2_selection == 0);
}

TEST_CASE("full document") {
  const auto cfg = parse_config(R"(# baseline
r_low = 40
r_high = 70
q = 2/5        # exact fraction
g1 = 55
g2 = 40
profile = "b,p"
t2_selection = 1.5
arithmetic = "rational"
seed = 99

[oracle]
grid_step = 0.5
deltas = [0.5, 0.9]
max_candidates = 5000
random_points = 3

[sweep]
q = [0, 1, 0.25]

[report]
g1 = 30
step = 1

[output]
format = "jsonl"
path = "out.jsonl"
)");
  REQUIRE(cfg.taxes.has_value());
  CHECK(cfg.taxes->g1 == 55);
  CHECK(cfg.taxes->g2 == 40);
  CHECK(*cfg.regime_profile == RegimeProfile{Regime::kBargain, Regime::kPost});
  CHECK(cfg.t2_selection == Rational(3, 2));
  CHECK(cfg.arithmetic == Arithmetic::kRational);
  CHECK(cfg.seed == 99);
  CHECK(cfg.oracle.grid_step == 0.5);
  CHECK(cfg.oracle.delta_schedule.deltas() == std::vector<double>{0.5, 0.9});
  CHECK(cfg.oracle.max_candidates == 5000);
  CHECK(cfg.random_points == 3);
  REQUIRE(cfg.sweep.has_value());
  CHECK(cfg.sweep->q->points().size() == 5);
  CHECK(*cfg.report.g1 == 30);
  CHECK(cfg.output.format == OutputFormat::kJsonLines);
  CHECK(cfg.output.path == "out.jsonl");
}

TEST_CASE("invalid values are validation errors carrying the cause") {
  const Error e = parse_error("r_low = 40\nr_high = 70\nq = 1.3\n");
  CHECK(e.code() == ErrorCode::kValidationError);
  CHECK(e.cause() == ErrorCode::kProbabilityRange);

  CHECK(parse_error("r_low = 40\nr_high = 30\nq = 0.3\n").cause() == ErrorCode::kRentOrder);
  CHECK(parse_error(std::string(kMinimal) + "g1 = 0\ng2 = 80\n").cause() ==
        ErrorCode::kTaxRange);
  CHECK(parse_error(std::string(kMinimal) + "[sweep]\nq = [0, 2, 0.5]\n").cause() ==
        ErrorCode::kProbabilityRange);
  CHECK(parse_error(std::string(kMinimal) + "[oracle]\ngrid_step = 0\n").code() ==
        ErrorCode::kValidationError);
}

TEST_CASE("strict parsing") {
  const Error unknown = parse_error(std::string(kMinimal) + "g3 = 10\n");
  CHECK(unknown.code() == ErrorCode::kParseError);
  CHECK(std::string(unknown.what()).find("line 4") != std::string::npos);
  CHECK(std::string(unknown.what()).find("g3") != std::string::npos);

  CHECK(parse_error(std::string(kMinimal) + "q = 0.5\n").code() == ErrorCode::kParseError);
  CHECK(parse_error(std::string(kMinimal) + "[plots]\n").code() == ErrorCode::kParseError);
  CHECK(parse_error(std::string(kMinimal) + "g1 = ten\ng2 = 20\n").code() ==
        ErrorCode::kParseError);
  CHECK(parse_error(std::string(kMinimal) + "profile = \"bz\"\n").code() ==
        ErrorCode::kParseError);
  CHECK(parse_error("r_low 40\n").code() == ErrorCode::kParseError);
  CHECK(parse_error(std::string(kMinimal) + "[sweep]\nq = [0, 1, -0.1]\n").code() !=
        ErrorCode::kInternal);
}

TEST_CASE("missing fields") {
  CHECK(parse_error("r_low = 40\nr_high = 70\n").code() == ErrorCode::kMissingField);
  CHECK(parse_error(std::string(kMinimal) + "g1 = 10\n").code() == ErrorCode::kMissingField);
  CHECK_NOTHROW(parse_config("r_low = 40\nr_high = 70\n[sweep]\nq = [0, 1, 0.5]\n"));
}

TEST_CASE("ranges and formats") {
  const RangeSpec r{Rational(0), Rational(1), Rational(1, 10)};
  const auto pts = r.points();
  REQUIRE(pts.size() == 11);
  CHECK(pts.back() == 1);
  CHECK(parse_output_format("jsonl") == OutputFormat::kJsonLines);
  CHECK(parse_output_format("csv") == OutputFormat::kCsv);
  CHECK(thrown_code([] { parse_output_format("xml"); }) == ErrorCode::kParseError);
}

TEST_CASE("exact decimal parsing") {
  CHECK(parse_rational("0.1") == Rational(1, 10));
  CHECK(parse_rational("-2.5e1") == Rational(-25));
  CHECK(parse_rational("7/14") == Rational(1, 2));
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational("0.09") == Rational(9, 100));
  CHECK(parse_rational("007.50") == Rational(15, 2));
  CHECK(parse_rational(".5") == Rational(1, 2));
  CHECK(parse_rational("0") == 0);
  CHECK(thrown_code([] { parse_rational("1/0"); }) == ErrorCode::kParseError);
  CHECK(thrown_code([] { parse_rational("abc"); }) == ErrorCode::kParseError);
}
