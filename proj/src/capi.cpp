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


#include "fiscal_duel/fiscal_duel.h"

#include <exception>
#include <string>

#include "fiscal_duel/error.hpp"
#include "fiscal_duel/runner.hpp"

struct fd_model {
  fiscal_duel::ModelParams<double> params;
};

struct fd_config {
  fiscal_duel::RunConfig config;
};

struct fd_result {
  std::string text;
  std::size_t rows = 0;
};

namespace {

using fiscal_duel::ErrorCode;

thread_local fd_error_code g_last_code = FD_E_NONE;
thread_local std::string g_last_message;

fd_error_code to_c(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNonPositiveRent: return FD_E_NON_POSITIVE_RENT;
    case ErrorCode::kRentOrder: return FD_E_RENT_ORDER;
    case ErrorCode::kProbabilityRange: return FD_E_PROBABILITY_RANGE;
    case ErrorCode::kTaxRange: return FD_E_TAX_RANGE;
    case ErrorCode::kRentExceedsProfit: return FD_E_RENT_EXCEEDS_PROFIT;
    case ErrorCode::kPreconditionOrder: return FD_E_PRECONDITION_ORDER;
    case ErrorCode::kPreconditionG1: return FD_E_PRECONDITION_G1;
    case ErrorCode::kNegativeSelection: return FD_E_NEGATIVE_SELECTION;
    case ErrorCode::kNoConvergence: return FD_E_NO_CONVERGENCE;
    case ErrorCode::kNoEquilibrium: return FD_E_NO_EQUILIBRIUM;
    case ErrorCode::kParseError: return FD_E_PARSE;
    case ErrorCode::kValidationError: return FD_E_VALIDATION;
    case ErrorCode::kMissingField: return FD_E_MISSING_FIELD;
    case ErrorCode::kInternal: return FD_E_INTERNAL;
  }
  return FD_E_INTERNAL;
}

fd_status fail(fd_error_code code, std::string message, fd_status status) {
  g_last_code = code;
  g_last_message = std::move(message);
  return status;
}

// Runs fn, translating exceptions into a status and the thread's last error.
template <class Fn>
fd_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const fiscal_duel::Error& err) {
    return fail(to_c(err.code()), err.what(),
                fiscal_duel::is_input_error(err.code()) ? FD_INPUT_ERROR
                                                        : FD_INTERNAL_ERROR);
  } catch (const std::exception& err) {
    return fail(FD_E_INTERNAL, err.what(), FD_INTERNAL_ERROR);
  } catch (...) {
    return fail(FD_E_INTERNAL, "unknown exception", FD_INTERNAL_ERROR);
  }
}

fd_status null_argument(const char* fn) {
  return fail(FD_E_NULL_ARGUMENT, std::string(fn) + ": null argument", FD_INPUT_ERROR);
}

fd_location to_c(fiscal_duel::Location loc) {
  switch (loc) {
    case fiscal_duel::Location::kJ1: return FD_LOC_J1;
    case fiscal_duel::Location::kJ2: return FD_LOC_J2;
    case fiscal_duel::Location::kAbroad: return FD_LOC_ABROAD;
  }
  return FD_LOC_ABROAD;
}

fiscal_duel::Regime from_c(fd_regime r) {
  return r == FD_POST ? fiscal_duel::Regime::kPost : fiscal_duel::Regime::kBargain;
}

fd_regime to_c(fiscal_duel::Regime r) {
  return r == fiscal_duel::Regime::kPost ? FD_POST : FD_BARGAIN;
}

fd_type_outcome to_c(const fiscal_duel::TypeOutcome<double>& t) {
  return {to_c(t.location), t.jurisdiction_tax, t.mnc_payoff,
          t.j1_payoff,      t.j2_payoff,        t.realized_welfare};
}

}  // namespace

extern "C" {

FD_API const char* fd_version(void) { return "1.0.0"; }

FD_API fd_error_code fd_last_error_code(void) { return g_last_code; }

FD_API const char* fd_last_error_message(void) { return g_last_message.c_str(); }

FD_API fd_status fd_model_create(double r_low, double r_high, double q,
                                 fd_model** out) {
  if (!out) return null_argument("fd_model_create");
  return guarded([&] {
    *out = new fd_model{fiscal_duel::validate_params(
        fiscal_duel::ModelParams<double>{r_low, r_high, q})};
    return FD_OK;
  });
}

FD_API void fd_model_free(fd_model* model) { delete model; }

FD_API fd_status fd_both_types_region(const fd_model* model, int* holds) {
  if (!model || !holds) return null_argument("fd_both_types_region");
  *holds = fiscal_duel::both_types_region(model->params) ? 1 : 0;
  return FD_OK;
}

FD_API fd_status fd_locational_rent(double profit_home, double profit_abroad,
                                    double* rent, double* rate) {
  if (!rent || !rate) return null_argument("fd_locational_rent");
  return guarded([&] {
    const auto r = fiscal_duel::locational_rent(
        fiscal_duel::RentProfile<double>{profit_home, profit_abroad});
    *rent = r.rent;
    *rate = r.optimal_profit_tax_rate;
    return FD_OK;
  });
}

FD_API fd_status fd_solve_subgame(const fd_model* model, double g1, double g2,
                                  fd_regime j1, fd_regime j2,
                                  double t2_selection, fd_subgame_outcome* out,
                                  int* swapped) {
  if (!model || !out) return null_argument("fd_solve_subgame");
  return guarded([&] {
    const auto canon = fiscal_duel::canonicalize_taxes(model->params, {g1, g2});
    fiscal_duel::RegimeProfile profile{from_c(j1), from_c(j2)};
    if (canon.swapped) std::swap(profile.j1, profile.j2);
    const auto o = fiscal_duel::solve_subgame(model->params, canon.taxes, profile,
                                              t2_selection);
    *out = fd_subgame_outcome{to_c(o.low), to_c(o.high),
                              o.posted_taxes ? 1 : 0,
                              o.posted_taxes ? o.posted_taxes->first : 0.0,
                              o.posted_taxes ? o.posted_taxes->second : 0.0,
                              o.expected_j1, o.expected_j2, o.expected_welfare};
    if (swapped) *swapped = canon.swapped ? 1 : 0;
    return FD_OK;
  });
}

FD_API fd_status fd_j1_regime_choice(const fd_model* model, double g1,
                                     double g2, fd_regime* regime,
                                     double* payoff_bargain,
                                     double* payoff_post) {
  if (!model || !regime) return null_argument("fd_j1_regime_choice");
  return guarded([&] {
    const auto canon = fiscal_duel::canonicalize_taxes(model->params, {g1, g2});
    const auto c = fiscal_duel::j1_regime_choice(model->params, canon.taxes);
    *regime = to_c(c.regime);
    if (payoff_bargain) *payoff_bargain = c.j1_payoff_bargain;
    if (payoff_post) *payoff_post = c.j1_payoff_post;
    return FD_OK;
  });
}

FD_API fd_status fd_optimal_central_taxes(const fd_model* model,
                                          fd_policy_result* out) {
  if (!model || !out) return null_argument("fd_optimal_central_taxes");
  return guarded([&] {
    const auto r = fiscal_duel::optimal_central_taxes(model->params);
    *out = fd_policy_result{r.optimal_taxes.g1, r.optimal_taxes.g2,
                            to_c(r.j1_regime),
                            r.attracts == fiscal_duel::Attracts::kBothTypes ? 1 : 0,
                            r.expected_welfare, r.both_types_region ? 1 : 0};
    return FD_OK;
  });
}

FD_API fd_status fd_scenario_welfare(const fd_model* model, fd_scenarios* out) {
  if (!model || !out) return null_argument("fd_scenario_welfare");
  return guarded([&] {
    const auto w = fiscal_duel::scenario_welfare(model->params);
    const auto check = fiscal_duel::dominance_check(model->params);
    *out = fd_scenarios{w.scenario_i,
                        w.scenario_ii,
                        w.scenario_iii,
                        w.central_only_posting,
                        w.central_only_bargaining,
                        w.local_only,
                        check.holds ? 1 : 0,
                        check.strict ? 1 : 0};
    return FD_OK;
  });
}

FD_API fd_status fd_config_parse(const char* text, fd_config** out) {
  if (!text || !out) return null_argument("fd_config_parse");
  return guarded([&] {
    *out = new fd_config{fiscal_duel::parse_config(text)};
    return FD_OK;
  });
}

FD_API void fd_config_free(fd_config* config) { delete config; }

FD_API fd_status fd_config_set_grid_step(fd_config* config, double grid_step) {
  if (!config) return null_argument("fd_config_set_grid_step");
  return guarded([&] {
    fiscal_duel::RunConfig candidate = config->config;
    candidate.oracle.grid_step = grid_step;
    fiscal_duel::validate_config(candidate);
    config->config = std::move(candidate);
    return FD_OK;
  });
}

FD_API fd_status fd_config_set_seed(fd_config* config, uint64_t seed) {
  if (!config) return null_argument("fd_config_set_seed");
  config->config.seed = seed;
  return FD_OK;
}

FD_API fd_status fd_config_set_format(fd_config* config, fd_format format) {
  if (!config) return null_argument("fd_config_set_format");
  config->config.output.format = format == FD_FORMAT_JSONL
                                     ? fiscal_duel::OutputFormat::kJsonLines
                                     : fiscal_duel::OutputFormat::kCsv;
  return FD_OK;
}

FD_API fd_status fd_config_get_format(const fd_config* config, fd_format* out) {
  if (!config || !out) return null_argument("fd_config_get_format");
  *out = config->config.output.format == fiscal_duel::OutputFormat::kJsonLines
             ? FD_FORMAT_JSONL
             : FD_FORMAT_CSV;
  return FD_OK;
}

FD_API const char* fd_config_output_path(const fd_config* config) {
  return config ? config->config.output.path.c_str() : "";
}

FD_API fd_status fd_parse_command(const char* name, fd_command* out) {
  if (!name || !out) return null_argument("fd_parse_command");
  return guarded([&] {
    *out = static_cast<fd_command>(fiscal_duel::parse_command(name));
    return FD_OK;
  });
}

FD_API fd_status fd_run(const fd_config* config, fd_command command,
                        fd_result** out) {
  if (!config || !out) return null_argument("fd_run");
  *out = nullptr;
  return guarded([&] {
    const auto cmd = static_cast<fiscal_duel::Command>(command);
    const fiscal_duel::RunOutput run = fiscal_duel::run_command(config->config, cmd);
    *out = new fd_result{
        fiscal_duel::render_table(run.table, config->config.output.format),
        run.table.rows.size()};
    if (run.oracle_mismatch) {
      return fail(FD_E_NONE, "verify: at least one oracle check did not match",
                  FD_ORACLE_MISMATCH);
    }
    return FD_OK;
  });
}

FD_API const char* fd_result_text(const fd_result* result) {
  return result ? result->text.c_str() : "";
}

FD_API size_t fd_result_row_count(const fd_result* result) {
  return result ? result->rows : 0;
}

FD_API void fd_result_free(fd_result* result) { delete result; }

}  // extern "C"
