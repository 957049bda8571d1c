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


// Brute-force verification of the closed forms. Every check here works from
// the game's primitives (MNC location choice, jurisdiction payoffs, discrete
// strategy grids, finite-discount bargaining) rather than from the closed
// form it certifies.

#ifndef FISCAL_DUEL_ORACLE_HPP_
#define FISCAL_DUEL_ORACLE_HPP_

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "fiscal_duel/bargaining.hpp"
#include "fiscal_duel/policy.hpp"

namespace fiscal_duel {

// Tie-breaking rules shared with the closed-form solvers. They are part of
// the model, so the fields are fixed.
struct TieBreaks {
  static constexpr Location kMncLocationTie = Location::kJ1;
  static constexpr bool kLocateWhenIndifferent = true;
  static constexpr Regime kJ1RegimeTie = Regime::kBargain;
  static constexpr Attracts kJ1PostingTie = Attracts::kBothTypes;
};

struct OracleConfig {
  double grid_step = 0.0;
  DiscountSchedule delta_schedule = DiscountSchedule::standard();
  TieBreaks tie_breaks;
  std::size_t max_candidates = 1'000'000;  // grid points per axis
};

// grid_step = r_low / 200 and the standard discount schedule.
OracleConfig default_oracle_config(const ModelParams<double>& p);

// Throws Error(kValidationError) on a non-positive step.
void validate_oracle_config(const OracleConfig& cfg);

struct NashProfile {
  double t1;
  double t2;
  double j1_payoff;
  double j2_payoff;
};

using OracleValue = std::variant<std::monostate, SubgameOutcome<double>,
                                 PolicyResult<double>, BargainSplit<double>>;

struct OracleReport {
  std::string check;
  bool matched = false;
  bool compared = false;  // false when no closed form applies (general region)
  OracleValue closed_form;
  OracleValue oracle_value;
  double max_discrepancy = 0.0;
  double bound = 0.0;  // grid step + tolerance
  std::size_t equilibrium_multiplicity = 0;
  // delta_limit_check: MNC-payoff errors per discount factor, MNC-first
  // followed by jurisdiction-first.
  std::vector<double> delta_errors;
};

// Exact multiples k * step for k = 0 .. floor(upper / step).
std::vector<double> tax_grid(double upper, double step, std::size_t cap);

// Enumerates every pure profile (t1, t2) of the simultaneous posting game on
// the tax grid and keeps the Nash ones. Selection: lowest t2, then highest
// J1 payoff, then lowest t1. Compared with solve_pp when g1 <= r_low.
// Throws Error(kNoEquilibrium) if the grid has no pure equilibrium.
OracleReport grid_nash_posting(const ModelParams<double>& p,
                               const CentralTaxes<double>& g,
                               const OracleConfig& cfg);

// J2 posts first, then J1 and the MNC bargain with the MNC's outside option
// in J2 (or abroad). Checks J2's payoff is zero for every grid t2 and that
// the bargained taxes match solve_bp pointwise in t2.
OracleReport grid_stackelberg_bp(const ModelParams<double>& p,
                                 const CentralTaxes<double>& g,
                                 const OracleConfig& cfg);

// Stage-2 play simulated from primitives at arbitrary taxes (g1 > r_low
// allowed): bargaining via the three-party split, posting via J1's grid best
// response against J2 undercut to zero.
struct SimulatedStageTwo {
  Regime regime;
  double j1_payoff_bargain;
  double j1_payoff_post;
  double expected_welfare;
  bool low_located;
  bool high_located;
};

SimulatedStageTwo simulate_stage_two(const ModelParams<double>& p,
                                     const CentralTaxes<double>& g,
                                     const std::vector<double>& t1_grid);

// Exhaustive search over 0 <= g1 <= g2 <= r_high on the grid.
OracleReport grid_optimal_central(const ModelParams<double>& p,
                                  const OracleConfig& cfg);

// Runs rubinstein_delta_oracle over the schedule for both proposer orders
// and checks convergence to rubinstein_outside: errors are nonincreasing
// along the schedule, the last is at most a fifth of the one before plus
// kBargainTol, and the last is within the grid bound.
OracleReport delta_limit_check(double s1, double outside,
                               const OracleConfig& cfg);

}  // namespace fiscal_duel

#endif  // FISCAL_DUEL_ORACLE_HPP_
