// Copyright 2026 The siri-bandits Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


/* C interface to the simulation library.
 *
 * Every function returns a siri_status; on failure a thread-local message is
 * available from siri_last_error(). Handles are opaque and owned by the
 * caller, who releases them with the matching *_destroy function. Strings
 * returned through char** out-parameters are released with siri_string_free.
 * Configs and reports cross the boundary as JSON text. */

#ifndef SIRI_SIRI_C_H_
#define SIRI_SIRI_C_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(SIRI_BUILDING_LIBRARY)
#define SIRI_API __declspec(dllexport)
#else
#define SIRI_API __declspec(dllimport)
#endif
#else
#define SIRI_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum siri_status {
  SIRI_OK = 0,
  SIRI_ERR_INVALID_ARGUMENT = 1,
  SIRI_ERR_BUDGET_EXHAUSTED = 2,
  SIRI_ERR_UNKNOWN_ARM = 3,
  SIRI_ERR_NO_SAMPLES = 4,
  SIRI_ERR_BUDGET_TOO_SMALL = 5,
  SIRI_ERR_UNSUPPORTED_SPEC = 6,
  SIRI_ERR_IO = 7,
  SIRI_ERR_INTERNAL = 8
} siri_status;

typedef struct siri_reservoir siri_reservoir;
typedef struct siri_session siri_session;
typedef struct siri_results siri_results;

typedef struct siri_arm_stats {
  uint64_t arm;
  uint64_t pulls;
  double mean_hat;
  double var_hat;
} siri_arm_stats;

typedef struct siri_config {
  double beta;
  double C;
  double delta;
  double A;
} siri_config;

typedef struct siri_schedule {
  double b;
  double a_n;
  uint64_t arms;
  int32_t t_bar;
  double log_arg_scale;
} siri_schedule;

typedef struct siri_outcome {
  uint64_t chosen;
  double regret;
  double chosen_mean;
  uint64_t chosen_pulls;
  uint64_t arms_drawn;
  uint64_t samples_used;
} siri_outcome;

typedef struct siri_rate_fit {
  double slope;
  double intercept;
  double r_squared;
  uint64_t num_points;
} siri_rate_fit;

typedef enum siri_index_kind { SIRI_INDEX_HOEFFDING = 0, SIRI_INDEX_BERNSTEIN = 1 } siri_index_kind;

/* Library */
SIRI_API const char* siri_version(void);
SIRI_API const char* siri_status_string(siri_status status);
SIRI_API const char* siri_last_error(void);
SIRI_API void siri_string_free(char* str);

/* Reservoirs: {"mean_law": {...}, "noise": {...}, "C": 1.0} */
SIRI_API siri_status siri_reservoir_create_json(const char* spec_json, siri_reservoir** out);
SIRI_API void siri_reservoir_destroy(siri_reservoir* reservoir);
SIRI_API siri_status siri_reservoir_mu_star(const siri_reservoir* reservoir, double* out);
SIRI_API siri_status siri_reservoir_tail_probability(const siri_reservoir* reservoir,
                                                     double eps, double* out);
SIRI_API siri_status siri_reservoir_quantile_g(const siri_reservoir* reservoir, double u,
                                               double* out);

/* Sessions. The session keeps its reservoir alive. Substream (seed,
 * stream_hi, stream_lo) matches replication (n, rep) of an experiment when
 * stream_hi = n and stream_lo = rep. */
SIRI_API siri_status siri_session_create(const siri_reservoir* reservoir, uint64_t budget,
                                         uint64_t seed, uint32_t stream_hi,
                                         uint32_t stream_lo, int log_rewards,
                                         siri_session** out);
SIRI_API void siri_session_destroy(siri_session* session);
SIRI_API siri_status siri_session_time(const siri_session* session, uint64_t* out);
SIRI_API siri_status siri_session_num_arms(const siri_session* session, uint64_t* out);
SIRI_API siri_status siri_session_pull_new_arm(siri_session* session, uint64_t* arm,
                                               double* reward);
SIRI_API siri_status siri_session_pull_arm(siri_session* session, uint64_t arm,
                                           uint64_t times, uint64_t* pulled);
SIRI_API siri_status siri_session_arm_stats(const siri_session* session, uint64_t arm,
                                            siri_arm_stats* out);
SIRI_API siri_status siri_session_most_pulled_arm(const siri_session* session,
                                                  uint64_t* out);
SIRI_API siri_status siri_session_simple_regret(const siri_session* session, uint64_t arm,
                                                double* out);
/* Writes arm,pull_index,reward rows; needs log_rewards at creation. */
SIRI_API siri_status siri_session_write_reward_log(const siri_session* session,
                                                   const char* path);
/* Runs SiRI on a fresh session and stores the chosen arm. */
SIRI_API siri_status siri_session_run_siri(siri_session* session, const siri_config* config,
                                           siri_index_kind kind, uint64_t* chosen);

/* Schedule and confidence indices */
SIRI_API siri_status siri_derive_schedule(const siri_config* config, uint64_t n,
                                          siri_index_kind kind, siri_schedule* out);
SIRI_API siri_status siri_confidence_index(const siri_arm_stats* stats,
                                           const siri_schedule* schedule,
                                           const siri_config* config, siri_index_kind kind,
                                           double* out);

/* One replication of any algorithm: {"name": "siri", "beta": 1, ...} */
SIRI_API siri_status siri_run_replication(const siri_reservoir* reservoir,
                                          const char* algorithm_json, uint64_t n,
                                          uint64_t seed, uint32_t stream_hi,
                                          uint32_t stream_lo, siri_outcome* out);

/* Experiments */
SIRI_API siri_status siri_experiment_run(const char* config_json, siri_results** out);
SIRI_API void siri_results_destroy(siri_results* results);
SIRI_API siri_status siri_results_row_count(const siri_results* results, uint64_t* out);
SIRI_API siri_status siri_results_failed_count(const siri_results* results, uint64_t* out);
SIRI_API siri_status siri_results_csv(const siri_results* results, char** out);
SIRI_API siri_status siri_results_write_csv(const siri_results* results, const char* path);
SIRI_API siri_status siri_results_summary_json(const siri_results* results, char** out);
/* algo may be NULL or "" for all rows. */
SIRI_API siri_status siri_results_fit_rate(const siri_results* results, const char* algo,
                                           siri_rate_fit* out);

/* Tail-index estimation:
 * {"reservoir": {...}, "N": 16, "epsilon": 0.49, "seed": 1,
 *  "delta": 0.01, "n": 65536, "c_prime": 0.1, "beta_floor": 0.5}
 * delta / n are optional; when n is given the result carries beta_bar. */
SIRI_API siri_status siri_estimate_beta_json(const char* request_json, char** out_json);

/* Validator suites: xi1, coverage, beta, regularity, all. */
SIRI_API siri_status siri_validate_json(const char* suite, const char* options_json,
                                        char** report_json, int* passed);

#ifdef __cplusplus
}
#endif

#endif /* SIRI_SIRI_C_H_ */
