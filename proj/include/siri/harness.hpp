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


// Monte-Carlo experiment runner, rate fitting and result persistence.

#ifndef SIRI_HARNESS_HPP_
#define SIRI_HARNESS_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "siri/adapt.hpp"
#include "siri/baselines.hpp"
#include "siri/engine.hpp"
#include "siri/reservoir.hpp"
#include "siri/siri.hpp"

namespace siri {

enum class AlgorithmKind { kSiri, kBernsteinSiri, kBetaBarSiri, kUcbF, kLilUcb, kUniform };

const char* algorithm_name(AlgorithmKind kind) noexcept;
// Accepts siri, bsiri, betabar-siri, ucbf, lilucb, uniform.
AlgorithmKind parse_algorithm(const std::string& name);

struct AlgorithmConfig {
  AlgorithmKind kind = AlgorithmKind::kSiri;
  SiriConfig siri;  // beta, C, delta, A, arm override, Bernstein exponent
  double c_prime = 0.1;
  double beta_floor = 0.5;
  BetaFloorRule floor_rule = BetaFloorRule::kFixed;
  double ucbf_zeta = 1.0;
  double ucbf_c = 1.0;
  Recommendation ucbf_recommendation = Recommendation::kMostPulled;
  LilUcbConfig lilucb;
  // Arm count for UCB-F, lil'UCB and uniform; each has its own default.
  std::optional<std::uint64_t> num_arms;
};

// Runs one replication on a fresh session of the given budget.
Outcome run_algorithm(const AlgorithmConfig& cfg, const Reservoir& reservoir,
                      std::uint64_t n, Stream stream);

struct ExperimentConfig {
  ReservoirSpec reservoir;
  std::vector<AlgorithmConfig> algorithms;
  std::vector<std::uint64_t> budgets;  // strictly increasing
  std::uint64_t replications = 1;
  std::uint64_t master_seed = 0;
  unsigned threads = 1;
  bool record_timing = false;  // wall_ns stays 0 otherwise, keeping output reproducible
};

void validate(const ExperimentConfig& cfg);

struct ResultRow {
  std::string algo;
  double beta = 0.0;
  std::uint64_t n = 0;
  std::uint64_t rep = 0;
  std::uint64_t seed = 0;
  double regret = 0.0;
  double chosen_mean = 0.0;
  std::uint64_t chosen_pulls = 0;
  std::uint64_t arms_drawn = 0;
  std::uint64_t wall_ns = 0;
  std::string error;  // empty on success

  bool ok() const noexcept { return error.empty(); }
};

// Substream for replication (n, rep); injective for n, rep < 2^32.
StreamId replication_stream_id(std::uint64_t n, std::uint64_t rep);

// Rows ordered by (algorithm position, n, rep); independent of thread count.
std::vector<ResultRow> run_experiment(const ExperimentConfig& cfg);

struct RateFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  std::vector<std::pair<double, double>> points;  // (ln n, ln mean regret)
};

// Ordinary least squares of ln(mean regret) on ln(n) for one algorithm (all
// rows when algo is empty). Needs >= 3 distinct budgets with positive mean.
RateFit fit_rate_slope(const std::vector<ResultRow>& rows, const std::string& algo = "");
RateFit fit_power_law(const std::vector<std::pair<double, double>>& n_and_mean);

struct SummaryStats {
  std::string algo;
  double beta = 0.0;
  std::uint64_t n = 0;
  std::uint64_t count = 0;
  std::uint64_t failures = 0;
  double mean = 0.0;
  double std_error = 0.0;
  double median = 0.0;
  double q10 = 0.0;
  double q90 = 0.0;
  double mean_arms_drawn = 0.0;
};

std::vector<SummaryStats> summarize(const std::vector<ResultRow>& rows);

// Linear-interpolation quantile of unsorted data, q in [0, 1].
double quantile(std::vector<double> values, double q);

inline constexpr const char* kCsvSchemaLine = "# siri-bandits schema v1";

void write_csv(std::ostream& out, const std::vector<ResultRow>& rows);
std::string to_csv(const std::vector<ResultRow>& rows);

}  // namespace siri

#endif  // SIRI_HARNESS_HPP_
