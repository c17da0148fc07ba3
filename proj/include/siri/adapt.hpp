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


// Unknown tail index: pilot estimation of beta and the inflated beta-bar run,
// plus the doubling-trick anytime wrapper.

#ifndef SIRI_ADAPT_HPP_
#define SIRI_ADAPT_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "siri/engine.hpp"
#include "siri/siri.hpp"

namespace siri {

struct BetaEstimate {
  std::uint64_t N = 0;      // arms sampled, and pulls per arm
  double epsilon = 0.0;
  double p_hat = 1.0;
  double m_star_hat = 0.0;
  double beta_hat = 0.0;
  double beta_bar = 0.0;    // equals beta_hat until inflate_beta is applied
  double c_prime = 0.1;
  double beta_floor = 0.5;
};

// p_hat and beta_hat from the N empirical means (N = means.size()).
BetaEstimate beta_from_means(std::span<const double> means, double epsilon);

// Draws N arms on a fresh session and pulls each N times (N^2 samples).
BetaEstimate estimate_beta(Session& session, std::uint64_t N, double epsilon);
BetaEstimate estimate_beta(const Reservoir& reservoir, std::uint64_t N,
                           double epsilon, Stream stream);

// beta_hat + c' max(sqrt(ln 1/delta), delta^{-1/beta_floor}) lnlnln(n) / ln(n),
// floored at beta_floor. lnlnln(n) is clamped at 0 for n <= e^e.
double inflate_beta(const BetaEstimate& est, double delta, std::uint64_t n);

enum class BetaFloorRule {
  kFixed,      // beta_floor as configured
  kLogLogLog,  // 1 / lnlnln(N), falling back to the fixed floor when undefined
};

struct BetaBarConfig {
  double C = 1.0;
  double delta = 0.01;
  double A = 0.3;
  double c_prime = 0.1;
  double beta_floor = 0.5;
  BetaFloorRule floor_rule = BetaFloorRule::kFixed;
};

// floor(n^{1/4}), exact in integers.
std::uint64_t pilot_arm_count(std::uint64_t n);
// 1 / lnlnln(n) clamped into [0.05, min(floor, 1/2, 1/floor) - 0.01].
double pilot_epsilon(std::uint64_t n, double beta_floor);
double resolve_beta_floor(const BetaBarConfig& cfg, std::uint64_t pilot_arms);

struct BetaBarRun {
  BetaEstimate estimate;
  SiriSchedule schedule;
  std::uint64_t pilot_budget = 0;
  std::uint64_t main_budget = 0;
  Outcome outcome;  // arms_drawn and samples_used cover both phases
};

BetaBarRun run_betabar_siri(const Reservoir& reservoir, std::uint64_t n,
                            const BetaBarConfig& cfg, Stream stream);

// Anytime conversion: budgets n0, 2 n0, 4 n0, ... each on a fresh session
// with its own substream; samples from earlier episodes are discarded.
using FixedBudgetAlgorithm =
    std::function<Outcome(const Reservoir&, std::uint64_t budget, Stream)>;

struct AnytimeEpisode {
  std::uint32_t index = 0;
  std::uint64_t budget = 0;
  Outcome outcome;
};

struct AnytimeResult {
  std::vector<AnytimeEpisode> episodes;
  std::uint64_t consumed = 0;

  // Output of the last completed episode; empty before the first completes.
  std::optional<Outcome> recommendation() const;
};

StreamId anytime_stream_id(std::uint32_t episode);

// Runs every episode that fits entirely within stop_at samples.
AnytimeResult run_anytime(const FixedBudgetAlgorithm& algorithm,
                          const Reservoir& reservoir, std::uint64_t n0,
                          std::uint64_t stop_at, std::uint64_t seed);

}  // namespace siri

#endif  // SIRI_ADAPT_HPP_
