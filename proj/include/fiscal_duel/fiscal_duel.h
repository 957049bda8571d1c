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


/* C interface to the fiscal-duel solver.
 *
 * Handles are opaque and owned by the caller once returned; release them
 * with the matching *_free function. Every call returns an fd_status. On
 * failure, fd_last_error_code() and fd_last_error_message() describe the
 * problem for the calling thread until its next failing call.
 */

#ifndef FISCAL_DUEL_H_
#define FISCAL_DUEL_H_

#include <stddef.h>
#include <stdint.h>

#if defined(FISCAL_DUEL_BUILDING)
#define FD_API __attribute__((visibility("default")))
#else
#define FD_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Values double as CLI exit codes. */
typedef enum fd_status {
  FD_OK = 0,
  FD_INPUT_ERROR = 1,
  FD_ORACLE_MISMATCH = 2,
  FD_INTERNAL_ERROR = 3
} fd_status;

typedef enum fd_error_code {
  FD_E_NONE = 0,
  FD_E_NON_POSITIVE_RENT,
  FD_E_RENT_ORDER,
  FD_E_PROBABILITY_RANGE,
  FD_E_TAX_RANGE,
  FD_E_RENT_EXCEEDS_PROFIT,
  FD_E_PRECONDITION_ORDER,
  FD_E_PRECONDITION_G1,
  FD_E_NEGATIVE_SELECTION,
  FD_E_NO_CONVERGENCE,
  FD_E_NO_EQUILIBRIUM,
  FD_E_PARSE,
  FD_E_VALIDATION,
  FD_E_MISSING_FIELD,
  FD_E_INTERNAL,
  FD_E_NULL_ARGUMENT
} fd_error_code;

typedef enum fd_command {
  FD_CMD_SOLVE = 0,
  FD_CMD_SWEEP,
  FD_CMD_VERIFY,
  FD_CMD_SCENARIOS,
  FD_CMD_REPORT
} fd_command;

typedef enum fd_format { FD_FORMAT_CSV = 0, FD_FORMAT_JSONL } fd_format;

typedef enum fd_regime { FD_BARGAIN = 0, FD_POST } fd_regime;

typedef enum fd_location { FD_LOC_J1 = 0, FD_LOC_J2, FD_LOC_ABROAD } fd_location;

typedef struct fd_model fd_model;
typedef struct fd_config fd_config;
typedef struct fd_result fd_result;

typedef struct fd_type_outcome {
  fd_location location;
  double jurisdiction_tax;
  double mnc_payoff;
  double j1_payoff;
  double j2_payoff;
  double realized_welfare;
} fd_type_outcome;

typedef struct fd_subgame_outcome {
  fd_type_outcome low;
  fd_type_outcome high;
  int has_posted_taxes;
  double posted_t1;
  double posted_t2;
  double expected_j1;
  double expected_j2;
  double expected_welfare;
} fd_subgame_outcome;

typedef struct fd_policy_result {
  double g1;
  double g2;
  fd_regime j1_regime;
  int attracts_both;
  double expected_welfare;
  int both_types_region;
} fd_policy_result;

typedef struct fd_scenarios {
  double scenario_i;
  double scenario_ii;
  double scenario_iii;
  double central_only_posting;
  double central_only_bargaining;
  double local_only;
  int dominance_holds;
  int dominance_strict;
} fd_scenarios;

FD_API const char* fd_version(void);
FD_API fd_error_code fd_last_error_code(void);
FD_API const char* fd_last_error_message(void);

/* Model primitives. */
FD_API fd_status fd_model_create(double r_low, double r_high, double q,
                                 fd_model** out);
FD_API void fd_model_free(fd_model* model);
FD_API fd_status fd_both_types_region(const fd_model* model, int* holds);
FD_API fd_status fd_locational_rent(double profit_home, double profit_abroad,
                                    double* rent, double* rate);

/* Closed-form solvers. Taxes with g1 > g2 are relabeled; *swapped reports
 * it (may be NULL). */
FD_API fd_status fd_solve_subgame(const fd_model* model, double g1, double g2,
                                  fd_regime j1, fd_regime j2,
                                  double t2_selection, fd_subgame_outcome* out,
                                  int* swapped);
FD_API fd_status fd_j1_regime_choice(const fd_model* model, double g1,
                                     double g2, fd_regime* regime,
                                     double* payoff_bargain,
                                     double* payoff_post);
FD_API fd_status fd_optimal_central_taxes(const fd_model* model,
                                          fd_policy_result* out);
FD_API fd_status fd_scenario_welfare(const fd_model* model, fd_scenarios* out);

/* Configuration documents and command execution. */
FD_API fd_status fd_config_parse(const char* text, fd_config** out);
FD_API void fd_config_free(fd_config* config);
FD_API fd_status fd_config_set_grid_step(fd_config* config, double grid_step);
FD_API fd_status fd_config_set_seed(fd_config* config, uint64_t seed);
FD_API fd_status fd_config_set_format(fd_config* config, fd_format format);
FD_API fd_status fd_config_get_format(const fd_config* config, fd_format* out);
/* Output path from the document; "" when unset. Valid while config lives. */
FD_API const char* fd_config_output_path(const fd_config* config);

/* Runs a command. FD_ORACLE_MISMATCH still produces a result. */
FD_API fd_status fd_run(const fd_config* config, fd_command command,
                        fd_result** out);
FD_API fd_status fd_parse_command(const char* name, fd_command* out);
FD_API const char* fd_result_text(const fd_result* result);
FD_API size_t fd_result_row_count(const fd_result* result);
FD_API void fd_result_free(fd_result* result);

#ifdef __cplusplus
}
#endif

#endif /* FISCAL_DUEL_H_ */
