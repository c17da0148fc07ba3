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


#include "siri/siri_c.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "siri/adapt.hpp"
#include "siri/engine.hpp"
#include "siri/harness.hpp"
#include "siri/reservoir.hpp"
#include "siri/serialize.hpp"
#include "siri/siri.hpp"
#include "siri/status.hpp"
#include "siri/suites.hpp"

struct siri_reservoir {
  std::shared_ptr<const siri::Reservoir> impl;
};

struct siri_session {
  std::shared_ptr<const siri::Reservoir> reservoir;
  std::unique_ptr<siri::Session> impl;
};

struct siri_results {
  std::vector<siri::ResultRow> rows;
};

namespace {

thread_local std::string g_last_error;

siri_status to_status(siri::ErrorCode code) {
  return static_cast<siri_status>(static_cast<int>(code));
}

template <typename F>
siri_status guarded(F&& body) {
  try {
    body();
    g_last_error.clear();
    return SIRI_OK;
  } catch (const siri::Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const nlohmann::json::exception& e) {
    g_last_error = std::string("json: ") + e.what();
    return SIRI_ERR_INVALID_ARGUMENT;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return SIRI_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SIRI_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown exception";
    return SIRI_ERR_INTERNAL;
  }
}

void need(const void* p, const char* what) {
  if (p == nullptr) siri::fail(siri::ErrorCode::kInvalidArgument, std::string(what) + " is null");
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

siri::SiriConfig to_cpp(const siri_config& c) {
  siri::SiriConfig cfg;
  cfg.beta = c.beta;
  cfg.C = c.C;
  cfg.delta = c.delta;
  cfg.A = c.A;
  return cfg;
}

siri::IndexKind to_cpp(siri_index_kind kind) {
  switch (kind) {
    case SIRI_INDEX_HOEFFDING: return siri::IndexKind::kHoeffding;
    case SIRI_INDEX_BERNSTEIN: return siri::IndexKind::kBernstein;
  }
  siri::fail(siri::ErrorCode::kInvalidArgument, "unknown index kind");
}

void fill(siri_outcome* out, const siri::Outcome& o) {
  out->chosen = o.chosen;
  out->regret = o.regret;
  out->chosen_mean = o.chosen_mean;
  out->chosen_pulls = o.chosen_pulls;
  out->arms_drawn = o.arms_drawn;
  out->samples_used = o.samples_used;
}

}  // namespace

extern "C" {

const char* siri_version(void) { return "0.1.0"; }

const char* siri_status_string(siri_status status) {
  return siri::error_code_name(static_cast<siri::ErrorCode>(status));
}

const char* siri_last_error(void) { return g_last_error.c_str(); }

void siri_string_free(char* str) { std::free(str); }

siri_status siri_reservoir_create_json(const char* spec_json, siri_reservoir** out) {
  return guarded([&] {
    need(spec_json, "spec_json");
    need(out, "out");
    *out = nullptr;
    auto spec = siri::reservoir_spec_from_json(siri::parse_json(spec_json));
    auto handle = std::make_unique<siri_reservoir>();
    handle->impl = std::make_shared<const siri::Reservoir>(std::move(spec));
    *out = handle.release();
  });
}

void siri_reservoir_destroy(siri_reservoir* reservoir) { delete reservoir; }

siri_status siri_reservoir_mu_star(const siri_reservoir* reservoir, double* out) {
  return guarded([&] {
    need(reservoir, "reservoir");
    need(out, "out");
    *out = reservoir->impl->mu_star();
  });
}

siri_status siri_reservoir_tail_probability(const siri_reservoir* reservoir, double eps,
                                            double* out) {
  return guarded([&] {
    need(reservoir, "reservoir");
    need(out, "out");
    *out = reservoir->impl->tail_probability(eps);
  });
}

siri_status siri_reservoir_quantile_g(const siri_reservoir* reservoir, double u,
                                      double* out) {
  return guarded([&] {
    need(reservoir, "reservoir");
    need(out, "out");
    *out = reservoir->impl->quantile_g(u);
  });
}

siri_status siri_session_create(const siri_reservoir* reservoir, uint64_t budget,
                                uint64_t seed, uint32_t stream_hi, uint32_t stream_lo,
                                int log_rewards, siri_session** out) {
  return guarded([&] {
    need(reservoir, "reservoir");
    need(out, "out");
    *out = nullptr;
    auto handle = std::make_unique<siri_session>();
    handle->reservoir = reservoir->impl;
    handle->impl = std::make_unique<siri::Session>(
        *handle->reservoir, budget, siri::Stream(seed, siri::StreamId{stream_hi, stream_lo}),
        log_rewards != 0);
    *out = handle.release();
  });
}

void siri_session_destroy(siri_session* session) { delete session; }

siri_status siri_session_time(const siri_session* session, uint64_t* out) {
  return guarded([&] {
    need(session, "session");
    need(out, "out");
    *out = session->impl->time();
  });
}

siri_status siri_session_num_arms(const siri_session* session, uint64_t* out) {
  return guarded([&] {
    need(session, "session");
    need(out, "out");
    *out = session->impl->num_arms();
  });
}

siri_status siri_session_pull_new_arm(siri_session* session, uint64_t* arm, double* reward) {
  return guarded([&] {
    need(session, "session");
    auto [k, r] = session->impl->pull_new_arm();
    if (arm != nullptr) *arm = k;
    if (reward != nullptr) *reward = r;
  });
}

siri_status siri_session_pull_arm(siri_session* session, uint64_t arm, uint64_t times,
                                  uint64_t* pulled) {
  return guarded([&] {
    need(session, "session");
    std::uint64_t got = session->impl->pull_arm(arm, times);
    if (pulled != nullptr) *pulled = got;
  });
}

siri_status siri_session_arm_stats(const siri_session* session, uint64_t arm,
                                   siri_arm_stats* out) {
  return guarded([&] {
    need(session, "session");
    need(out, "out");
    siri::ArmStats s = session->impl->arm_stats(arm);
    out->arm = s.k;
    out->pulls = s.pulls;
    out->mean_hat = s.mean_hat;
    out->var_hat = s.var_hat;
  });
}

siri_status siri_session_most_pulled_arm(const siri_session* session, uint64_t* out) {
  return guarded([&] {
    need(session, "session");
    need(out, "out");
    *out = session->impl->most_pulled_arm();
  });
}

siri_status siri_session_simple_regret(const siri_session* session, uint64_t arm,
                                       double* out) {
  return guarded([&] {
    need(session, "session");
    need(out, "out");
    *out = session->impl->simple_regret(arm);
  });
}

siri_status siri_session_write_reward_log(const siri_session* session, const char* path) {
  return guarded([&] {
    need(session, "session");
    need(path, "path");
    if (!session->impl->logging())
      siri::fail(siri::ErrorCode::kInvalidArgument, "session was created without reward logging");
    std::ofstream file(path);
    if (!file) siri::fail(siri::ErrorCode::kIo, std::string("cannot open ") + path);
    session->impl->write_reward_log_csv(file);
    if (!file) siri::fail(siri::ErrorCode::kIo, std::string("write failed: ") + path);
  });
}

siri_status siri_session_run_siri(siri_session* session, const siri_config* config,
                                  siri_index_kind kind, uint64_t* chosen) {
  return guarded([&] {
    need(session, "session");
    need(config, "config");
    siri::ArmIndex k = siri::run_siri(*session->impl, to_cpp(*config), to_cpp(kind));
    if (chosen != nullptr) *chosen = k;
  });
}

siri_status siri_derive_schedule(const siri_config* config, uint64_t n, siri_index_kind kind,
                                 siri_schedule* out) {
  return guarded([&] {
    need(config, "config");
    need(out, "out");
    siri::SiriConfig cfg = to_cpp(*config);
    siri::SiriSchedule s = to_cpp(kind) == siri::IndexKind::kBernstein
                               ? siri::derive_bernstein_schedule(cfg, n)
                               : siri::derive_schedule(cfg, n);
    out->b = s.b;
    out->a_n = s.a_n;
    out->arms = s.arms;
    out->t_bar = s.t_bar;
    out->log_arg_scale = s.log_arg_scale;
  });
}

siri_status siri_confidence_index(const siri_arm_stats* stats, const siri_schedule* schedule,
                                  const siri_config* config, siri_index_kind kind,
                                  double* out) {
  return guarded([&] {
    need(stats, "stats");
    need(schedule, "schedule");
    need(config, "config");
    need(out, "out");
    siri::ArmStats s{stats->arm, stats->pulls, stats->mean_hat, stats->var_hat};
    siri::SiriSchedule sched;
    sched.b = schedule->b;
    sched.a_n = schedule->a_n;
    sched.arms = schedule->arms;
    sched.t_bar = schedule->t_bar;
    sched.log_arg_scale = schedule->log_arg_scale;
    siri::SiriConfig cfg = to_cpp(*config);
    siri::validate(cfg);
    *out = to_cpp(kind) == siri::IndexKind::kBernstein ? siri::bernstein_index(s, sched, cfg)
                                                        : siri::ucb_index(s, sched, cfg);
  });
}

siri_status siri_run_replication(const siri_reservoir* reservoir, const char* algorithm_json,
                                 uint64_t n, uint64_t seed, uint32_t stream_hi,
                                 uint32_t stream_lo, siri_outcome* out) {
  return guarded([&] {
    need(reservoir, "reservoir");
    need(algorithm_json, "algorithm_json");
    need(out, "out");
    auto cfg = siri::algorithm_config_from_json(siri::parse_json(algorithm_json));
    auto outcome = siri::run_algorithm(cfg, *reservoir->impl, n,
                                       siri::Stream(seed, siri::StreamId{stream_hi, stream_lo}));
    fill(out, outcome);
  });
}

siri_status siri_experiment_run(const char* config_json, siri_results** out) {
  return guarded([&] {
    need(config_json, "config_json");
    need(out, "out");
    *out = nullptr;
    auto cfg = siri::experiment_config_from_json(siri::parse_json(config_json));
    auto handle = std::make_unique<siri_results>();
    handle->rows = siri::run_experiment(cfg);
    *out = handle.release();
  });
}

void siri_results_destroy(siri_results* results) { delete results; }

siri_status siri_results_row_count(const siri_results* results, uint64_t* out) {
  return guarded([&] {
    need(results, "results");
    need(out, "out");
    *out = results->rows.size();
  });
}

siri_status siri_results_failed_count(const siri_results* results, uint64_t* out) {
  return guarded([&] {
    need(results, "results");
    need(out, "out");
    std::uint64_t failed = 0;
    for (const auto& row : results->rows) failed += row.ok() ? 0 : 1;
    *out = failed;
  });
}

siri_status siri_results_csv(const siri_results* results, char** out) {
  return guarded([&] {
    need(results, "results");
    need(out, "out");
    *out = dup_string(siri::to_csv(results->rows));
  });
}

siri_status siri_results_write_csv(const siri_results* results, const char* path) {
  return guarded([&] {
    need(results, "results");
    need(path, "path");
    std::ofstream file(path);
    if (!file) siri::fail(siri::ErrorCode::kIo, std::string("cannot open ") + path);
    siri::write_csv(file, results->rows);
    if (!file) siri::fail(siri::ErrorCode::kIo, std::string("write failed: ") + path);
  });
}

siri_status siri_results_summary_json(const siri_results* results, char** out) {
  return guarded([&] {
    need(results, "results");
    need(out, "out");
    siri::Json j;
    j["summary"] = siri::to_json(siri::summarize(results->rows));
    siri::Json fits = siri::Json::object();
    std::vector<std::string> algos;
    for (const auto& row : results->rows) {
      bool seen = false;
      for (const auto& a : algos) seen = seen || a == row.algo;
      if (!seen) algos.push_back(row.algo);
    }
    for (const auto& a : algos) {
      try {
        fits[a] = siri::to_json(siri::fit_rate_slope(results->rows, a));
      } catch (const siri::Error&) {
        fits[a] = nullptr;  // fewer than two budgets
      }
    }
    j["rate_fits"] = fits;
    *out = dup_string(j.dump(2));
  });
}

siri_status siri_results_fit_rate(const siri_results* results, const char* algo,
                                  siri_rate_fit* out) {
  return guarded([&] {
    need(results, "results");
    need(out, "out");
    auto fit = siri::fit_rate_slope(results->rows, algo == nullptr ? "" : algo);
    out->slope = fit.slope;
    out->intercept = fit.intercept;
    out->r_squared = fit.r_squared;
    out->num_points = fit.points.size();
  });
}

siri_status siri_estimate_beta_json(const char* request_json, char** out_json) {
  return guarded([&] {
    need(request_json, "request_json");
    need(out_json, "out_json");
    siri::Json req = siri::parse_json(request_json);
    if (!req.contains("reservoir"))
      siri::fail(siri::ErrorCode::kInvalidArgument, "request needs a reservoir");
    siri::Reservoir reservoir(siri::reservoir_spec_from_json(req.at("reservoir")));
    std::uint64_t N = req.at("N").get<std::uint64_t>();
    double eps = req.at("epsilon").get<double>();
    std::uint64_t seed = req.value("seed", std::uint64_t{0});
    siri::BetaEstimate est =
        siri::estimate_beta(reservoir, N, eps, siri::Stream(seed, siri::StreamId{0, 0}));
    est.c_prime = req.value("c_prime", est.c_prime);
    est.beta_floor = req.value("beta_floor", est.beta_floor);
    if (req.contains("n")) {
      double delta = req.value("delta", 0.01);
      est.beta_bar = siri::inflate_beta(est, delta, req.at("n").get<std::uint64_t>());
    }
    *out_json = dup_string(siri::to_json(est).dump(2));
  });
}

siri_status siri_validate_json(const char* suite, const char* options_json,
                               char** report_json, int* passed) {
  return guarded([&] {
    need(suite, "suite");
    need(report_json, "report_json");
    siri::Json options = (options_json == nullptr || *options_json == '\0')
                             ? siri::Json::object()
                             : siri::parse_json(options_json);
    bool ok = false;
    siri::Json report = siri::run_validation_suite(suite, options, ok);
    *report_json = dup_string(report.dump(2));
    if (passed != nullptr) *passed = ok ? 1 : 0;
  });
}

}  // extern "C"
