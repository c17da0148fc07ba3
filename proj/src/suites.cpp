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


#include "siri/suites.hpp"

#include <cmath>

#include "siri/status.hpp"

namespace siri {
namespace {

template <class T>
T option(const Json& j, const char* key, T fallback) {
  if (!j.is_object() || !j.contains(key) || j.at(key).is_null()) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    fail(ErrorCode::kInvalidArgument, std::string("bad option '") + key + "': " + e.what());
  }
}

ReservoirSpec reservoir_option(const Json& j, ReservoirSpec fallback) {
  if (!j.is_object() || !j.contains("reservoir")) return fallback;
  return reservoir_spec_from_json(j.at("reservoir"));
}

ReservoirSpec beta_reservoir(double shape_y, NoiseModel noise) {
  ReservoirSpec spec;
  spec.mean_law = BetaLaw{1.0, shape_y};
  spec.noise = noise;
  return spec;
}

Json xi1_suite(const Json& opt, bool& passed) {
  ReservoirSpec fallback;
  fallback.mean_law = Uniform01{};
  fallback.noise = Deterministic{};
  const Reservoir reservoir(reservoir_option(opt, fallback));
  const int t_bar = option(opt, "t_bar", 8);
  require(t_bar >= 0 && t_bar < 40, "t_bar out of range");
  const auto trials = option<std::uint64_t>(opt, "trials", 2000);
  const auto seed = option<std::uint64_t>(opt, "seed", 1);
  const auto deltas = option<std::vector<double>>(opt, "deltas", {0.01, 0.05});
  Json runs = Json::array();
  passed = true;
  for (double delta : deltas) {
    const Xi1Report r = check_xi1(reservoir, 1ull << t_bar, delta, trials, seed);
    Json j = to_json(r);
    j["delta"] = delta;
    j["t_bar"] = t_bar;
    runs.push_back(j);
    passed = passed && r.passed;
  }
  return {{"suite", "xi1"}, {"runs", runs}, {"passed", passed}};
}

Json coverage_suite(const Json& opt, bool& passed) {
  ReservoirSpec fallback;
  fallback.mean_law = Uniform01{};
  fallback.noise = BernoulliReward{};
  const Reservoir reservoir(reservoir_option(opt, fallback));
  const double beta = option(opt, "beta", 1.0);
  const int t_bar = option(opt, "t_bar", 6);
  require(t_bar >= 0 && t_bar < 40, "t_bar out of range");
  SiriConfig cfg;
  cfg.beta = beta;
  cfg.C = option(opt, "C", reservoir.reward_bound());
  cfg.delta = option(opt, "delta", 0.01);
  validate(cfg);
  SiriSchedule sched;
  sched.b = std::min(beta, 2.0);
  sched.arms = 1ull << t_bar;
  sched.t_bar = t_bar;
  sched.log_arg_scale = std::exp2(2.0 * t_bar / sched.b);
  const CoverageReport r = check_index_coverage(
      reservoir, option(opt, "arm_mean", 0.5), cfg.C, cfg.delta, sched,
      option<std::uint64_t>(opt, "trials", 10000), option<std::uint64_t>(opt, "seed", 1));
  passed = r.passed;
  Json j = to_json(r);
  j["suite"] = "coverage";
  j["t_bar"] = t_bar;
  j["b"] = sched.b;
  j["delta"] = cfg.delta;
  j["C"] = cfg.C;
  return j;
}

Json beta_suite(const Json& opt, bool& passed) {
  const auto betas = option<std::vector<double>>(opt, "betas", {1.0, 2.0});
  const auto Ns = option<std::vector<std::uint64_t>>(opt, "Ns", {16, 64, 256});
  const double epsilon = option(opt, "epsilon", 0.4);
  const auto trials = option<std::uint64_t>(opt, "trials", 200);
  const auto seed = option<std::uint64_t>(opt, "seed", 1);
  Json runs = Json::array();
  passed = true;
  for (double beta : betas) {
    const Reservoir reservoir(beta_reservoir(beta, Deterministic{}));
    const BetaConcentrationReport r =
        check_beta_concentration(reservoir, beta, Ns, epsilon, trials, seed);
    Json j = to_json(r);
    j["beta"] = beta;
    j["epsilon"] = epsilon;
    runs.push_back(j);
    passed = passed && r.passed;
  }
  return {{"suite", "beta"}, {"runs", runs}, {"passed", passed}};
}

Json regularity_suite(const Json& opt, bool& passed) {
  const auto draws = option<std::uint64_t>(opt, "draws", 100000);
  const auto seed = option<std::uint64_t>(opt, "seed", 1);
  std::vector<ReservoirSpec> specs;
  if (opt.is_object() && opt.contains("reservoir")) {
    specs.push_back(reservoir_spec_from_json(opt.at("reservoir")));
  } else {
    for (double y : {1.0, 2.0, 3.0}) specs.push_back(beta_reservoir(y, Deterministic{}));
    ReservoirSpec general;
    general.mean_law = BetaLaw{2.0, 3.0};
    general.noise = Deterministic{};
    specs.push_back(general);
    ReservoirSpec uniform;
    uniform.mean_law = Uniform01{};
    uniform.noise = Deterministic{};
    specs.push_back(uniform);
  }
  Json runs = Json::array();
  passed = true;
  for (const ReservoirSpec& spec : specs) {
    const Reservoir reservoir(spec);
    const RegularityReport r = check_regularity(reservoir, draws, seed);
    Json j = to_json(r);
    j["reservoir"] = to_json(spec);
    runs.push_back(j);
    passed = passed && r.passed;
  }
  return {{"suite", "regularity"}, {"runs", runs}, {"passed", passed}};
}

}  // namespace

Json run_validation_suite(const std::string& suite, const Json& options, bool& passed) {
  if (suite == "xi1") return xi1_suite(options, passed);
  if (suite == "coverage") return coverage_suite(options, passed);
  if (suite == "beta") return beta_suite(options, passed);
  if (suite == "regularity") return regularity_suite(options, passed);
  if (suite == "all") {
    Json out = Json::object();
    passed = true;
    for (const char* name : {"regularity", "xi1", "coverage", "beta"}) {
      bool ok = false;
      out[name] = run_validation_suite(name, options, ok);
      passed = passed && ok;
    }
    out["passed"] = passed;
    return out;
  }
  fail(ErrorCode::kInvalidArgument, "unknown validation suite '" + suite + "'");
}

}  // namespace siri
