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

#include <string>

#include "siri/serialize.hpp"
#include "test_util.hpp"

namespace siri {
namespace {

using testing::error_of;

TEST_CASE("reservoir round trip") {
  ReservoirSpec spec;
  spec.mean_law = BetaLaw{2.0, 3.0};
  spec.noise = TruncatedGaussian{0.5, -1.0, 1.0, TruncationMode::kClip};
  spec.reward_bound = 1.5;
  const ReservoirSpec back = reservoir_spec_from_json(to_json(spec));
  CHECK(to_json(back) == to_json(spec));
  const auto& law = std::get<BetaLaw>(back.mean_law);
  CHECK(law.shape_x == 2.0);
  CHECK(law.shape_y == 3.0);
  const auto& noise = std::get<TruncatedGaussian>(back.noise);
  CHECK(noise.sd == 0.5);
  CHECK(noise.low == -1.0);
  CHECK(noise.mode == TruncationMode::kClip);
  CHECK(back.reward_bound == 1.5);

  spec.mean_law = TabulatedMeans{{0.1, 0.7}};
  spec.noise = BernoulliReward{};
  CHECK(to_json(reservoir_spec_from_json(to_json(spec))) == to_json(spec));
  spec.mean_law = Uniform01{};
  spec.noise = Deterministic{};
  CHECK(to_json(reservoir_spec_from_json(to_json(spec))) == to_json(spec));
}

TEST_CASE("reservoir defaults") {
  const ReservoirSpec spec = reservoir_spec_from_json(Json::object());
  CHECK(std::holds_alternative<Uniform01>(spec.mean_law));
  const auto& noise = std::get<TruncatedGaussian>(spec.noise);
  CHECK(noise.sd == 1.0);
  CHECK(noise.mode == TruncationMode::kReject);
  CHECK(spec.reward_bound == 1.0);
}

TEST_CASE("malformed reservoirs") {
  auto code = [](const char* text) {
    return error_of([&] { reservoir_spec_from_json(parse_json(text)); });
  };
  CHECK(code(R"({"mean_law": {"type": "cauchy"}})") == ErrorCode::kInvalidArgument);
  CHECK(code(R"({"noise": {"type": "laplace"}})") == ErrorCode::kInvalidArgument);
  CHECK(code(R"({"noise": {"type": "truncated_gaussian", "mode": "wrap"}})") ==
        ErrorCode::kInvalidArgument);
  CHECK(code(R"({"mean_law": {"type": "beta", "shape_y": "three"}})") ==
        ErrorCode::kInvalidArgument);
  CHECK(code(R"({"mean_law": {"type": "tabulated"}})") == ErrorCode::kInvalidArgument);
  CHECK(code(R"({"C": 1, "colour": "red"})") == ErrorCode::kInvalidArgument);
  CHECK(code(R"([1, 2])") == ErrorCode::kInvalidArgument);
  CHECK(error_of([] { parse_json("{not json"); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("algorithm round trip") {
  AlgorithmConfig a;
  a.kind = AlgorithmKind::kLilUcb;
  a.siri.beta = 3.0;
  a.siri.delta = 0.05;
  a.siri.arms_override = 17;
  a.siri.bernstein_exponent = BernsteinExponent::kBHalf;
  a.c_prime = 0.2;
  a.floor_rule = BetaFloorRule::kLogLogLog;
  a.ucbf_zeta = 1.2;
  a.ucbf_recommendation = Recommendation::kBestEmpiricalMean;
  a.lilucb.lambda = 9.0;
  a.lilucb.stopping_rule = false;
  a.num_arms = 40;
  const AlgorithmConfig b = algorithm_config_from_json(to_json(a));
  CHECK(to_json(b) == to_json(a));
  CHECK(b.kind == AlgorithmKind::kLilUcb);
  CHECK(*b.siri.arms_override == 17);
  CHECK(*b.lilucb.lambda == 9.0);
  CHECK(*b.num_arms == 40);
}

TEST_CASE("algorithm defaults and errors") {
  const AlgorithmConfig a = algorithm_config_from_json(parse_json(R"({"name": "bsiri"})"));
  CHECK(a.kind == AlgorithmKind::kBernsteinSiri);
  CHECK(a.siri.A == 0.3);
  CHECK(a.siri.C == 1.0);
  CHECK(a.siri.delta == 0.01);
  CHECK_FALSE(a.siri.arms_override.has_value());
  auto code = [](const char* text) {
    return error_of([&] { algorithm_config_from_json(parse_json(text)); });
  };
  CHECK(code(R"({"name": "nope"})") == ErrorCode::kInvalidArgument);
  CHECK(code(R"({"name": "siri", "delta": 2})") == ErrorCode::kInvalidArgument);
  CHECK(code(R"({"name": "siri", "bernstein_exponent": "beta"})") ==
        ErrorCode::kInvalidArgument);
  CHECK(code(R"({"name": "siri", "detla": 0.1})") == ErrorCode::kInvalidArgument);
  CHECK(code(R"({"name": "ucbf", "ucbf": {"recommendation": "random"}})") ==
        ErrorCode::kInvalidArgument);
}

TEST_CASE("experiment round trip") {
  ExperimentConfig cfg;
  cfg.reservoir.mean_law = BetaLaw{1.0, 2.0};
  AlgorithmConfig a;
  cfg.algorithms = {a, a};
  cfg.algorithms[1].kind = AlgorithmKind::kUniform;
  cfg.budgets = {64, 128};
  cfg.replications = 3;
  cfg.master_seed = 0xFFFFFFFFFFFFull;
  cfg.threads = 2;
  const ExperimentConfig back = experiment_config_from_json(to_json(cfg));
  CHECK(to_json(back) == to_json(cfg));
  CHECK(back.master_seed == 0xFFFFFFFFFFFFull);

  const ExperimentConfig single = experiment_config_from_json(parse_json(
      R"({"algorithm": {"name": "ucbf"}, "budgets": [100], "replications": 2})"));
  REQUIRE(single.algorithms.size() == 1);
  CHECK(single.algorithms[0].kind == AlgorithmKind::kUcbF);
  CHECK(error_of([] {
          experiment_config_from_json(parse_json(R"({"budget": [100]})"));
        }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("reports serialize") {
  SiriConfig cfg;
  const Json s = to_json(derive_schedule(cfg, 1024));
  CHECK(s["T_bar"] == 10);
  CHECK(s["t_bar"] == 3);
  BetaEstimate e;
  e.N = 16;
  e.beta_hat = 1.25;
  CHECK(to_json(e)["beta_hat"] == 1.25);
  SummaryStats st;
  st.algo = "siri";
  st.mean = std::numeric_limits<double>::quiet_NaN();
  CHECK(to_json(std::vector<SummaryStats>{st})[0]["mean"].is_null());
}

}  // namespace
}  // namespace siri
