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


#include "siri/serialize.hpp"

#include <cmath>
#include <initializer_list>
#include <limits>
#include <string>

#include "siri/status.hpp"

namespace siri {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

template <class T>
T get_or(const Json& j, const char* key, T fallback) {
  if (!j.contains(key) || j.at(key).is_null()) return fallback;
  return j.at(key).get<T>();
}

template <class T>
std::optional<T> get_optional(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

void allow_keys(const Json& j, std::initializer_list<const char*> keys, const char* where) {
  require(j.is_object(), std::string(where) + " must be a JSON object");
  for (const auto& item : j.items()) {
    bool known = false;
    for (const char* k : keys) known = known || item.key() == k;
    if (!known) {
      fail(ErrorCode::kInvalidArgument,
           "unknown key '" + item.key() + "' in " + where);
    }
  }
}

Json number(double x) {
  return std::isfinite(x) ? Json(x) : Json(nullptr);
}

// nlohmann type errors become config errors.
template <class F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    fail(ErrorCode::kInvalidArgument, std::string("bad config: ") + e.what());
  }
}

const char* recommendation_name(Recommendation r) {
  return r == Recommendation::kMostPulled ? "most_pulled" : "best_mean";
}

}  // namespace

Json to_json(const ReservoirSpec& spec) {
  Json j;
  j["mean_law"] = std::visit(
      Overloaded{[](const BetaLaw& l) -> Json {
                   return {{"type", "beta"}, {"shape_x", l.shape_x}, {"shape_y", l.shape_y}};
                 },
                 [](const Uniform01&) -> Json { return {{"type", "uniform"}}; },
                 [](const TabulatedMeans& l) -> Json {
                   return {{"type", "tabulated"}, {"means", l.means}};
                 }},
      spec.mean_law);
  j["noise"] = std::visit(
      Overloaded{[](const TruncatedGaussian& n) -> Json {
                   return {{"type", "truncated_gaussian"},
                           {"sd", n.sd},
                           {"low", n.low},
                           {"high", n.high},
                           {"mode", n.mode == TruncationMode::kReject ? "reject" : "clip"}};
                 },
                 [](const BernoulliReward&) -> Json { return {{"type", "bernoulli"}}; },
                 [](const Deterministic&) -> Json { return {{"type", "deterministic"}}; }},
      spec.noise);
  j["C"] = spec.reward_bound;
  return j;
}

ReservoirSpec reservoir_spec_from_json(const Json& j) {
  return guarded([&] {
    ReservoirSpec spec;
    allow_keys(j, {"mean_law", "noise", "C"}, "reservoir");
    if (j.contains("mean_law")) {
      const Json& law = j.at("mean_law");
      allow_keys(law, {"type", "shape_x", "shape_y", "means"}, "mean_law");
      const std::string type = law.at("type").get<std::string>();
      if (type == "beta") {
        spec.mean_law = BetaLaw{get_or(law, "shape_x", 1.0), get_or(law, "shape_y", 1.0)};
      } else if (type == "uniform") {
        spec.mean_law = Uniform01{};
      } else if (type == "tabulated") {
        spec.mean_law = TabulatedMeans{law.at("means").get<std::vector<double>>()};
      } else {
        fail(ErrorCode::kInvalidArgument, "unknown mean_law type '" + type + "'");
      }
    }
    if (j.contains("noise")) {
      const Json& noise = j.at("noise");
      allow_keys(noise, {"type", "sd", "low", "high", "mode"}, "noise");
      const std::string type = noise.at("type").get<std::string>();
      if (type == "truncated_gaussian") {
        TruncatedGaussian tg;
        tg.sd = get_or(noise, "sd", tg.sd);
        tg.low = get_or(noise, "low", tg.low);
        tg.high = get_or(noise, "high", tg.high);
        const std::string mode = get_or<std::string>(noise, "mode", "reject");
        require(mode == "reject" || mode == "clip", "noise mode must be reject or clip");
        tg.mode = mode == "reject" ? TruncationMode::kReject : TruncationMode::kClip;
        spec.noise = tg;
      } else if (type == "bernoulli") {
        spec.noise = BernoulliReward{};
      } else if (type == "deterministic") {
        spec.noise = Deterministic{};
      } else {
        fail(ErrorCode::kInvalidArgument, "unknown noise type '" + type + "'");
      }
    }
    spec.reward_bound = get_or(j, "C", spec.reward_bound);
    return spec;
  });
}

Json to_json(const AlgorithmConfig& cfg) {
  Json j;
  j["name"] = algorithm_name(cfg.kind);
  j["beta"] = cfg.siri.beta;
  j["C"] = cfg.siri.C;
  j["delta"] = cfg.siri.delta;
  j["A"] = cfg.siri.A;
  j["arms_override"] = optional_json(cfg.siri.arms_override);
  j["bernstein_exponent"] =
      cfg.siri.bernstein_exponent == BernsteinExponent::kBetaHalf ? "beta/2" : "b/2";
  j["c_prime"] = cfg.c_prime;
  j["beta_floor"] = cfg.beta_floor;
  j["beta_floor_rule"] = cfg.floor_rule == BetaFloorRule::kFixed ? "fixed" : "logloglog";
  j["num_arms"] = optional_json(cfg.num_arms);
  j["ucbf"] = {{"zeta", cfg.ucbf_zeta},
               {"c", cfg.ucbf_c},
               {"recommendation", recommendation_name(cfg.ucbf_recommendation)}};
  j["lilucb"] = {{"epsilon", cfg.lilucb.epsilon},
                 {"beta", cfg.lilucb.beta},
                 {"lambda", optional_json(cfg.lilucb.lambda)},
                 {"sigma", cfg.lilucb.sigma},
                 {"delta_divisor", cfg.lilucb.delta_divisor},
                 {"stopping_rule", cfg.lilucb.stopping_rule}};
  return j;
}

AlgorithmConfig algorithm_config_from_json(const Json& j) {
  return guarded([&] {
    allow_keys(j,
               {"name", "beta", "C", "delta", "A", "arms_override", "bernstein_exponent",
                "c_prime", "beta_floor", "beta_floor_rule", "num_arms", "ucbf", "lilucb"},
               "algorithm");
    AlgorithmConfig cfg;
    cfg.kind = parse_algorithm(get_or<std::string>(j, "name", "siri"));
    cfg.siri.beta = get_or(j, "beta", cfg.siri.beta);
    cfg.siri.C = get_or(j, "C", cfg.siri.C);
    cfg.siri.delta = get_or(j, "delta", cfg.siri.delta);
    cfg.siri.A = get_or(j, "A", cfg.siri.A);
    cfg.siri.arms_override = get_optional<std::uint64_t>(j, "arms_override");
    const std::string exponent = get_or<std::string>(j, "bernstein_exponent", "beta/2");
    require(exponent == "beta/2" || exponent == "b/2",
            "bernstein_exponent must be beta/2 or b/2");
    cfg.siri.bernstein_exponent =
        exponent == "beta/2" ? BernsteinExponent::kBetaHalf : BernsteinExponent::kBHalf;
    cfg.c_prime = get_or(j, "c_prime", cfg.c_prime);
    cfg.beta_floor = get_or(j, "beta_floor", cfg.beta_floor);
    const std::string rule = get_or<std::string>(j, "beta_floor_rule", "fixed");
    require(rule == "fixed" || rule == "logloglog",
            "beta_floor_rule must be fixed or logloglog");
    cfg.floor_rule = rule == "fixed" ? BetaFloorRule::kFixed : BetaFloorRule::kLogLogLog;
    cfg.num_arms = get_optional<std::uint64_t>(j, "num_arms");
    if (j.contains("ucbf")) {
      const Json& u = j.at("ucbf");
      allow_keys(u, {"zeta", "c", "recommendation"}, "ucbf");
      cfg.ucbf_zeta = get_or(u, "zeta", cfg.ucbf_zeta);
      cfg.ucbf_c = get_or(u, "c", cfg.ucbf_c);
      const std::string rec = get_or<std::string>(u, "recommendation", "most_pulled");
      require(rec == "most_pulled" || rec == "best_mean",
              "recommendation must be most_pulled or best_mean");
      cfg.ucbf_recommendation =
          rec == "most_pulled" ? Recommendation::kMostPulled : Recommendation::kBestEmpiricalMean;
    }
    if (j.contains("lilucb")) {
      const Json& l = j.at("lilucb");
      allow_keys(l, {"epsilon", "beta", "lambda", "sigma", "delta_divisor", "stopping_rule"},
                 "lilucb");
      cfg.lilucb.epsilon = get_or(l, "epsilon", cfg.lilucb.epsilon);
      cfg.lilucb.beta = get_or(l, "beta", cfg.lilucb.beta);
      cfg.lilucb.lambda = get_optional<double>(l, "lambda");
      cfg.lilucb.sigma = get_or(l, "sigma", cfg.lilucb.sigma);
      cfg.lilucb.delta_divisor = get_or(l, "delta_divisor", cfg.lilucb.delta_divisor);
      cfg.lilucb.stopping_rule = get_or(l, "stopping_rule", cfg.lilucb.stopping_rule);
    }
    validate(cfg.siri);
    return cfg;
  });
}

Json to_json(const ExperimentConfig& cfg) {
  Json algos = Json::array();
  for (const AlgorithmConfig& a : cfg.algorithms) algos.push_back(to_json(a));
  return {{"reservoir", to_json(cfg.reservoir)},
          {"algorithms", algos},
          {"budgets", cfg.budgets},
          {"replications", cfg.replications},
          {"master_seed", cfg.master_seed},
          {"threads", cfg.threads},
          {"record_timing", cfg.record_timing}};
}

ExperimentConfig experiment_config_from_json(const Json& j) {
  return guarded([&] {
    allow_keys(j,
               {"reservoir", "algorithms", "algorithm", "budgets", "replications",
                "master_seed", "threads", "record_timing"},
               "experiment config");
    ExperimentConfig cfg;
    if (j.contains("reservoir")) cfg.reservoir = reservoir_spec_from_json(j.at("reservoir"));
    if (j.contains("algorithms")) {
      for (const Json& a : j.at("algorithms")) {
        cfg.algorithms.push_back(algorithm_config_from_json(a));
      }
    }
    if (j.contains("algorithm")) {
      cfg.algorithms.push_back(algorithm_config_from_json(j.at("algorithm")));
    }
    cfg.budgets = get_or(j, "budgets", cfg.budgets);
    cfg.replications = get_or(j, "replications", cfg.replications);
    cfg.master_seed = get_or(j, "master_seed", cfg.master_seed);
    cfg.threads = get_or(j, "threads", cfg.threads);
    cfg.record_timing = get_or(j, "record_timing", cfg.record_timing);
    return cfg;
  });
}

Json to_json(const SiriSchedule& s) {
  return {{"b", s.b},          {"A_n", s.a_n},
          {"T_bar", s.arms},   {"t_bar", s.t_bar},
          {"log_arg_scale", s.log_arg_scale}};
}

Json to_json(const BetaEstimate& e) {
  return {{"N", e.N},
          {"epsilon", e.epsilon},
          {"p_hat", e.p_hat},
          {"m_star_hat", e.m_star_hat},
          {"beta_hat", e.beta_hat},
          {"beta_bar", e.beta_bar},
          {"c_prime", e.c_prime},
          {"beta_floor", e.beta_floor}};
}

Json to_json(const RateFit& fit) {
  Json points = Json::array();
  for (const auto& [x, y] : fit.points) points.push_back({x, y});
  return {{"slope", fit.slope},
          {"intercept", fit.intercept},
          {"r_squared", fit.r_squared},
          {"points", points}};
}

Json to_json(const std::vector<SummaryStats>& summary) {
  Json out = Json::array();
  for (const SummaryStats& s : summary) {
    out.push_back({{"algo", s.algo},
                   {"beta", s.beta},
                   {"n", s.n},
                   {"count", s.count},
                   {"failures", s.failures},
                   {"mean", number(s.mean)},
                   {"std_error", number(s.std_error)},
                   {"median", number(s.median)},
                   {"q10", number(s.q10)},
                   {"q90", number(s.q90)},
                   {"mean_arms_drawn", number(s.mean_arms_drawn)}});
  }
  return out;
}

Json to_json(const IntervalCensus& c) {
  return {{"t_bar", c.t_bar}, {"counts", c.counts}, {"n_star", c.n_star},
          {"n_below", c.n_below}};
}

Json to_json(const Xi1Report& r) {
  return {{"trials", r.trials},         {"passes", r.passes},
          {"pass_rate", r.pass_rate},   {"bound", r.bound},
          {"std_error", r.std_error},   {"applicable", r.applicable},
          {"passed", r.passed}};
}

Json to_json(const CoverageReport& r) {
  Json rows = Json::array();
  for (const CoverageRow& row : r.rows) {
    rows.push_back({{"v", row.v},
                    {"samples", row.samples},
                    {"trials", row.trials},
                    {"violations", row.violations},
                    {"rate", row.rate},
                    {"radius", row.radius},
                    {"budget", row.budget},
                    {"threshold", row.threshold},
                    {"skipped", row.skipped},
                    {"passed", row.passed}});
  }
  return {{"rows", rows}, {"passed", r.passed}};
}

Json to_json(const BetaConcentrationReport& r) {
  return {{"Ns", r.Ns},
          {"median_abs_error", r.median_abs_error},
          {"median_beta_hat", r.median_beta_hat},
          {"trials", r.trials},
          {"inversions", r.inversions},
          {"low_power", r.low_power},
          {"passed", r.passed}};
}

Json to_json(const RegularityReport& r) {
  return {{"beta", r.constants.beta},
          {"E_lo", r.constants.e_lo},
          {"E_hi", r.constants.e_hi},
          {"B_tilde", r.constants.b_tilde},
          {"mu_star", r.constants.mu_star},
          {"max_bound_violation", r.max_bound_violation},
          {"max_duality_error", r.max_duality_error},
          {"max_empirical_z", r.max_empirical_z},
          {"draws", r.draws},
          {"passed", r.passed}};
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(ErrorCode::kInvalidArgument, std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace siri
