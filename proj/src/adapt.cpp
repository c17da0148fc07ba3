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


#include "siri/adapt.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "siri/status.hpp"

namespace siri {
namespace {

double logloglog(double x) {
  const double l1 = std::log(x);
  if (l1 <= 0.0) return -INFINITY;
  const double l2 = std::log(l1);
  if (l2 <= 0.0) return -INFINITY;
  return std::log(l2);
}

unsigned __int128 pow4(std::uint64_t r) {
  const unsigned __int128 sq = static_cast<unsigned __int128>(r) * r;
  return sq * sq;
}

}  // namespace

BetaEstimate beta_from_means(std::span<const double> means, double epsilon) {
  require(means.size() >= 2, "beta estimate needs N >= 2");
  require(std::isfinite(epsilon) && epsilon > 0.0, "epsilon must be positive");
  BetaEstimate est;
  est.N = means.size();
  est.epsilon = epsilon;
  est.m_star_hat = *std::max_element(means.begin(), means.end());
  const double nd = static_cast<double>(est.N);
  const double width = std::pow(nd, -epsilon);
  const auto close = std::count_if(means.begin(), means.end(), [&](double m) {
    return est.m_star_hat - m <= width;
  });
  est.p_hat = static_cast<double>(close) / nd;
  const double beta_hat = -std::log(est.p_hat) / (epsilon * std::log(nd));
  est.beta_hat = beta_hat > 0.0 ? beta_hat : 0.0;
  est.beta_bar = est.beta_hat;
  return est;
}

BetaEstimate estimate_beta(Session& session, std::uint64_t N, double epsilon) {
  require(N >= 2, "beta estimate needs N >= 2");
  require(session.fresh(), "estimate_beta needs a fresh session");
  require(N <= (1ull << 32), "beta estimate N too large");
  const std::uint64_t needed = N * N;
  if (session.budget() < needed) {
    fail(ErrorCode::kBudgetTooSmall, "beta estimate needs N^2 = " +
                                         std::to_string(needed) + " samples");
  }
  std::vector<double> means(N);
  for (std::uint64_t i = 0; i < N; ++i) {
    const ArmIndex k = session.pull_new_arm().first;
    session.pull_arm(k, N - 1);
    means[i] = session.arm_stats(k).mean_hat;
  }
  return beta_from_means(means, epsilon);
}

BetaEstimate estimate_beta(const Reservoir& reservoir, std::uint64_t N,
                           double epsilon, Stream stream) {
  require(N >= 2, "beta estimate needs N >= 2");
  require(N <= (1ull << 32), "beta estimate N too large");
  Session session(reservoir, N * N, stream);
  return estimate_beta(session, N, epsilon);
}

double inflate_beta(const BetaEstimate& est, double delta, std::uint64_t n) {
  require(delta > 0.0 && delta < 1.0, "delta must lie in (0, 1)");
  require(est.beta_floor > 0.0, "beta floor must be positive");
  require(est.c_prime >= 0.0, "c' must be nonnegative");
  require(n >= 2, "inflation needs n >= 2");
  const double nd = static_cast<double>(n);
  const double lll = std::max(logloglog(nd), 0.0);
  const double spread =
      std::max(std::sqrt(std::log(1.0 / delta)), std::pow(delta, -1.0 / est.beta_floor));
  const double beta_bar = est.beta_hat + est.c_prime * spread * lll / std::log(nd);
  return std::max(beta_bar, est.beta_floor);
}

std::uint64_t pilot_arm_count(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::pow(static_cast<double>(n), 0.25));
  while (pow4(r + 1) <= n) ++r;
  while (r > 0 && pow4(r) > n) --r;
  return r;
}

double pilot_epsilon(std::uint64_t n, double beta_floor) {
  require(beta_floor > 0.0, "beta floor must be positive");
  const double upper = std::min({beta_floor, 0.5, 1.0 / beta_floor}) - 0.01;
  require(upper > 0.0, "beta floor too small for a valid epsilon");
  const double lll = logloglog(static_cast<double>(n));
  // Undefined or non-positive lnlnln(n) means 1/lnlnln(n) exceeds any bound.
  const double raw = lll > 0.0 ? 1.0 / lll : INFINITY;
  return std::min(std::max(raw, 0.05), upper);
}

double resolve_beta_floor(const BetaBarConfig& cfg, std::uint64_t pilot_arms) {
  if (cfg.floor_rule == BetaFloorRule::kLogLogLog) {
    const double lll = logloglog(static_cast<double>(pilot_arms));
    if (lll > 0.0) return 1.0 / lll;
  }
  return cfg.beta_floor;
}

BetaBarRun run_betabar_siri(const Reservoir& reservoir, std::uint64_t n,
                            const BetaBarConfig& cfg, Stream stream) {
  require(cfg.C > 0.0 && cfg.A > 0.0, "C and A must be positive");
  require(cfg.delta > 0.0 && cfg.delta < 1.0, "delta must lie in (0, 1)");
  const std::uint64_t pilot = pilot_arm_count(n);
  if (pilot < 2) {
    fail(ErrorCode::kBudgetTooSmall, "beta-bar SiRI needs n >= 16");
  }
  BetaBarRun run;
  run.pilot_budget = pilot * pilot;
  run.main_budget = n - run.pilot_budget;
  if (run.main_budget < 2) {
    fail(ErrorCode::kBudgetTooSmall, "no budget left after the pilot phase");
  }

  const double floor = resolve_beta_floor(cfg, pilot);
  Session pilot_session(reservoir, run.pilot_budget, stream);
  run.estimate = estimate_beta(pilot_session, pilot, pilot_epsilon(n, floor));
  run.estimate.c_prime = cfg.c_prime;
  run.estimate.beta_floor = floor;
  run.estimate.beta_bar = inflate_beta(run.estimate, cfg.delta, n);

  SiriConfig siri_cfg;
  siri_cfg.beta = run.estimate.beta_bar;
  siri_cfg.C = cfg.C;
  siri_cfg.delta = cfg.delta;
  siri_cfg.A = cfg.A;
  run.schedule = derive_schedule(siri_cfg, run.main_budget);

  Session main_session(reservoir, run.main_budget, pilot_session.stream());
  const SiriSchedule& sched = run.schedule;
  const ArmIndex chosen = run_siri(main_session, sched, [&](const ArmStats& s) {
    return ucb_index(s, sched, siri_cfg);
  });
  run.outcome = main_session.outcome(chosen);
  run.outcome.arms_drawn += pilot_session.num_arms();
  run.outcome.samples_used += pilot_session.time();
  return run;
}

std::optional<Outcome> AnytimeResult::recommendation() const {
  if (episodes.empty()) return std::nullopt;
  return episodes.back().outcome;
}

StreamId anytime_stream_id(std::uint32_t episode) {
  return StreamId{0xFFFFFFFFu, episode};
}

AnytimeResult run_anytime(const FixedBudgetAlgorithm& algorithm,
                          const Reservoir& reservoir, std::uint64_t n0,
                          std::uint64_t stop_at, std::uint64_t seed) {
  require(n0 >= 1, "initial anytime budget must be >= 1");
  AnytimeResult result;
  std::uint64_t budget = n0;
  for (std::uint32_t i = 0;; ++i) {
    if (budget > stop_at - result.consumed) break;
    AnytimeEpisode episode;
    episode.index = i;
    episode.budget = budget;
    episode.outcome = algorithm(reservoir, budget, Stream(seed, anytime_stream_id(i)));
    result.consumed += budget;
    result.episodes.push_back(episode);
    if (budget > (UINT64_MAX >> 1)) break;
    budget *= 2;
  }
  return result;
}

}  // namespace siri
