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


#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "siri/siri_c.h"

namespace {

const char* kUniformDeterministic =
    R"({"mean_law": {"type": "uniform"}, "noise": {"type": "deterministic"}})";
const char* kTwoArms =
    R"({"mean_law": {"type": "tabulated", "means": [0.9, 0.1]}, "noise": {"type": "deterministic"}})";

std::string take(char* s) {
  std::string out = s;
  siri_string_free(s);
  return out;
}

TEST_CASE("library basics") {
  CHECK(std::string(siri_version()) == "0.1.0");
  CHECK(std::string(siri_status_string(SIRI_ERR_BUDGET_TOO_SMALL)) == "BudgetTooSmall");
  CHECK(std::string(siri_status_string(SIRI_OK)) == "Ok");
  siri_string_free(nullptr);
}

TEST_CASE("reservoir handle") {
  siri_reservoir* r = nullptr;
  REQUIRE(siri_reservoir_create_json(
              R"({"mean_law": {"type": "beta", "shape_x": 1, "shape_y": 2}})", &r) == SIRI_OK);
  double x = 0.0;
  CHECK(siri_reservoir_mu_star(r, &x) == SIRI_OK);
  CHECK(x == 1.0);
  CHECK(siri_reservoir_tail_probability(r, 0.1, &x) == SIRI_OK);
  CHECK(x == doctest::Approx(0.01));
  CHECK(siri_reservoir_quantile_g(r, 0.04, &x) == SIRI_OK);
  CHECK(x == doctest::Approx(0.2));
  CHECK(siri_reservoir_tail_probability(r, -1.0, &x) == SIRI_ERR_INVALID_ARGUMENT);
  CHECK(std::string(siri_last_error()).find("eps") != std::string::npos);
  siri_reservoir_destroy(r);
  siri_reservoir_destroy(nullptr);
}

TEST_CASE("bad inputs report errors") {
  siri_reservoir* r = reinterpret_cast<siri_reservoir*>(0x1);
  CHECK(siri_reservoir_create_json("{oops", &r) == SIRI_ERR_INVALID_ARGUMENT);
  CHECK(r == nullptr);
  CHECK(siri_reservoir_create_json(nullptr, &r) == SIRI_ERR_INVALID_ARGUMENT);
  CHECK(siri_reservoir_create_json(R"({"noise": {"type": "bernoulli"}, "C": 0.5})", &r) ==
        SIRI_ERR_INVALID_ARGUMENT);
  double x;
  CHECK(siri_reservoir_mu_star(nullptr, &x) == SIRI_ERR_INVALID_ARGUMENT);
  CHECK(std::string(siri_last_error()) == "reservoir is null");
}

TEST_CASE("session lifecycle") {
  siri_reservoir* r = nullptr;
  REQUIRE(siri_reservoir_create_json(kTwoArms, &r) == SIRI_OK);
  siri_session* s = nullptr;
  REQUIRE(siri_session_create(r, 10, 1, 0, 0, 1, &s) == SIRI_OK);
  // The session keeps the reservoir alive.
  siri_reservoir_destroy(r);

  uint64_t arm = 99, pulled = 0, t = 0;
  double reward = 0.0;
  CHECK(siri_session_pull_new_arm(s, &arm, &reward) == SIRI_OK);
  CHECK(arm == 0);
  CHECK(reward == 0.9);
  CHECK(siri_session_pull_new_arm(s, &arm, &reward) == SIRI_OK);
  CHECK(siri_session_pull_arm(s, 1, 20, &pulled) == SIRI_OK);
  CHECK(pulled == 8);
  CHECK(siri_session_time(s, &t) == SIRI_OK);
  CHECK(t == 10);
  CHECK(siri_session_pull_new_arm(s, &arm, &reward) == SIRI_ERR_BUDGET_EXHAUSTED);
  CHECK(siri_session_pull_arm(s, 5, 1, &pulled) == SIRI_ERR_UNKNOWN_ARM);

  siri_arm_stats st;
  CHECK(siri_session_arm_stats(s, 1, &st) == SIRI_OK);
  CHECK(st.pulls == 9);
  CHECK(st.mean_hat == doctest::Approx(0.1));
  uint64_t k = 0;
  CHECK(siri_session_most_pulled_arm(s, &k) == SIRI_OK);
  CHECK(k == 1);
  double regret = 0.0;
  CHECK(siri_session_simple_regret(s, 1, &regret) == SIRI_OK);
  CHECK(regret == doctest::Approx(0.8));
  uint64_t arms = 0;
  CHECK(siri_session_num_arms(s, &arms) == SIRI_OK);
  CHECK(arms == 2);

  const char* path = "capi_reward_log.csv";
  CHECK(siri_session_write_reward_log(s, path) == SIRI_OK);
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  CHECK(header == "arm,pull_index,reward");
  std::remove(path);
  siri_session_destroy(s);

  siri_reservoir* r2 = nullptr;
  REQUIRE(siri_reservoir_create_json(kTwoArms, &r2) == SIRI_OK);
  CHECK(siri_session_create(r2, 0, 1, 0, 0, 0, &s) == SIRI_ERR_INVALID_ARGUMENT);
  REQUIRE(siri_session_create(r2, 5, 1, 0, 0, 0, &s) == SIRI_OK);
  CHECK(siri_session_write_reward_log(s, "x.csv") == SIRI_ERR_INVALID_ARGUMENT);
  CHECK(siri_session_arm_stats(s, 0, &st) == SIRI_ERR_UNKNOWN_ARM);
  siri_session_destroy(s);
  siri_reservoir_destroy(r2);
}

TEST_CASE("schedule and indices") {
  const siri_config cfg{1.0, 1.0, 0.01, 0.3};
  siri_schedule sched;
  REQUIRE(siri_derive_schedule(&cfg, 1024, SIRI_INDEX_HOEFFDING, &sched) == SIRI_OK);
  CHECK(sched.arms == 10);
  CHECK(sched.t_bar == 3);
  CHECK(sched.a_n == doctest::Approx(0.3));
  const siri_arm_stats st{0, 64, 0.5, 0.25};
  double b = 0.0;
  CHECK(siri_confidence_index(&st, &sched, &cfg, SIRI_INDEX_HOEFFDING, &b) == SIRI_OK);
  CHECK(b == doctest::Approx(1.180403074884465).epsilon(1e-12));
  CHECK(siri_confidence_index(&st, &sched, &cfg, SIRI_INDEX_BERNSTEIN, &b) == SIRI_OK);
  CHECK(b == doctest::Approx(1.056068889910424).epsilon(1e-12));

  const siri_config big{1.0, 1.0, 0.01, 100.0};
  CHECK(siri_derive_schedule(&big, 100, SIRI_INDEX_HOEFFDING, &sched) ==
        SIRI_ERR_BUDGET_TOO_SMALL);
  const siri_config bad{-1.0, 1.0, 0.01, 0.3};
  CHECK(siri_derive_schedule(&bad, 100, SIRI_INDEX_HOEFFDING, &sched) ==
        SIRI_ERR_INVALID_ARGUMENT);
}

TEST_CASE("running algorithms") {
  siri_reservoir* r = nullptr;
  REQUIRE(siri_reservoir_create_json(kUniformDeterministic, &r) == SIRI_OK);
  siri_session* s = nullptr;
  REQUIRE(siri_session_create(r, 4096, 5, 4096, 0, 0, &s) == SIRI_OK);
  const siri_config cfg{1.0, 1.0, 0.01, 0.3};
  uint64_t chosen = 0;
  CHECK(siri_session_run_siri(s, &cfg, SIRI_INDEX_HOEFFDING, &chosen) == SIRI_OK);
  double via_session = 0.0;
  CHECK(siri_session_simple_regret(s, chosen, &via_session) == SIRI_OK);
  CHECK(siri_session_run_siri(s, &cfg, SIRI_INDEX_HOEFFDING, &chosen) ==
        SIRI_ERR_INVALID_ARGUMENT);
  siri_session_destroy(s);

  siri_outcome o;
  CHECK(siri_run_replication(r, R"({"name": "siri"})", 4096, 5, 4096, 0, &o) == SIRI_OK);
  CHECK(o.regret == via_session);
  CHECK(o.samples_used == 4096);
  CHECK(siri_run_replication(r, R"({"name": "siri", "A": 99})", 64, 5, 0, 0, &o) ==
        SIRI_ERR_BUDGET_TOO_SMALL);
  CHECK(siri_run_replication(r, R"({"name": "x"})", 64, 5, 0, 0, &o) ==
        SIRI_ERR_INVALID_ARGUMENT);
  siri_reservoir_destroy(r);
}

TEST_CASE("experiments") {
  const char* cfg = R"({
    "reservoir": {"mean_law": {"type": "uniform"}, "noise": {"type": "bernoulli"}},
    "algorithms": [{"name": "siri"}, {"name": "uniform"}],
    "budgets": [256, 1024, 4096],
    "replications": 4,
    "master_seed": 11
  })";
  siri_results* res = nullptr;
  REQUIRE(siri_experiment_run(cfg, &res) == SIRI_OK);
  uint64_t rows = 0, failed = 1;
  CHECK(siri_results_row_count(res, &rows) == SIRI_OK);
  CHECK(rows == 24);
  CHECK(siri_results_failed_count(res, &failed) == SIRI_OK);
  CHECK(failed == 0);

  char* csv = nullptr;
  CHECK(siri_results_csv(res, &csv) == SIRI_OK);
  const std::string text = take(csv);
  CHECK(text.rfind("# siri-bandits schema v1\n", 0) == 0);

  const char* path = "capi_results.csv";
  CHECK(siri_results_write_csv(res, path) == SIRI_OK);
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == text);
  std::remove(path);

  char* summary = nullptr;
  CHECK(siri_results_summary_json(res, &summary) == SIRI_OK);
  const std::string js = take(summary);
  CHECK(js.find("\"rate_fits\"") != std::string::npos);
  CHECK(js.find("\"uniform\"") != std::string::npos);

  siri_rate_fit fit;
  CHECK(siri_results_fit_rate(res, "siri", &fit) == SIRI_OK);
  CHECK(fit.num_points == 3);
  CHECK(fit.slope < 0.0);
  CHECK(siri_results_fit_rate(res, "lilucb", &fit) == SIRI_ERR_INVALID_ARGUMENT);
  siri_results_destroy(res);

  siri_results* again = nullptr;
  REQUIRE(siri_experiment_run(cfg, &again) == SIRI_OK);
  CHECK(siri_results_csv(again, &csv) == SIRI_OK);
  CHECK(take(csv) == text);
  siri_results_destroy(again);

  CHECK(siri_experiment_run(R"({"budgets": [10, 5]})", &res) == SIRI_ERR_INVALID_ARGUMENT);
  CHECK(res == nullptr);
}

TEST_CASE("beta estimation") {
  char* out = nullptr;
  REQUIRE(siri_estimate_beta_json(
              R"({"reservoir": {"mean_law": {"type": "uniform"}, "noise": {"type": "deterministic"}},
                  "N": 64, "epsilon": 0.4, "seed": 3, "n": 1000000, "delta": 0.01})",
              &out) == SIRI_OK);
  const std::string js = take(out);
  CHECK(js.find("\"beta_hat\"") != std::string::npos);
  CHECK(js.find("\"beta_bar\"") != std::string::npos);
  CHECK(siri_estimate_beta_json(R"({"N": 4, "epsilon": 0.4})", &out) ==
        SIRI_ERR_INVALID_ARGUMENT);
}

TEST_CASE("validation suites") {
  char* report = nullptr;
  int passed = 0;
  REQUIRE(siri_validate_json("regularity", R"({"draws": 20000})", &report, &passed) ==
          SIRI_OK);
  CHECK(passed == 1);
  CHECK(take(report).find("\"suite\": \"regularity\"") != std::string::npos);
  CHECK(siri_validate_json("nonsense", nullptr, &report, &passed) ==
        SIRI_ERR_INVALID_ARGUMENT);
  REQUIRE(siri_validate_json("xi1", R"({"trials": 50, "t_bar": 5})", &report, &passed) ==
          SIRI_OK);
  siri_string_free(report);
}

}  // namespace
