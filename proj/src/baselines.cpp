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


#include "siri/baselines.hpp"

#include <algorithm>
#include <cmath>

#include "siri/argmax.hpp"
#include "siri/status.hpp"

namespace siri {
namespace {

ArmIndex recommend(const Session& session, Recommendation rule) {
  return rule == Recommendation::kMostPulled ? session.most_pulled_arm()
                                             : session.best_empirical_arm();
}

// Draws up to `arms` new arms with one pull each; returns how many were drawn.
std::uint64_t draw_initial(Session& session, std::uint64_t arms) {
  const std::uint64_t k = std::min(arms, session.remaining());
  for (std::uint64_t i = 0; i < k; ++i) session.pull_new_arm();
  return k;
}

}  // namespace

std::uint64_t ucbf_arm_count(double beta, std::uint64_t n) {
  require(beta > 0.0, "beta must be positive");
  const double raw = std::ceil(std::pow(static_cast<double>(n), beta / (beta + 1.0)));
  return std::clamp<std::uint64_t>(static_cast<std::uint64_t>(raw), 1, n);
}

double ucbf_index(const ArmStats& stats, const UcbFConfig& cfg, std::uint64_t n) {
  const double t = static_cast<double>(stats.pulls);
  const double e = cfg.zeta * std::log(static_cast<double>(n) / cfg.delta);
  return stats.mean_hat + std::sqrt(2.0 * stats.var_hat * e / t) +
         3.0 * cfg.c * cfg.C * e / t;
}

double lilucb_index(const ArmStats& stats, const LilUcbConfig& cfg) {
  const double t = static_cast<double>(stats.pulls);
  const double delta = cfg.delta / cfg.delta_divisor;
  const double inner = std::max(1.0, std::log((1.0 + cfg.epsilon) * t));
  const double radius = std::sqrt(2.0 * cfg.sigma * cfg.sigma * (1.0 + cfg.epsilon) *
                                  std::log(inner / delta) / t);
  return stats.mean_hat + (1.0 + cfg.beta) * (1.0 + std::sqrt(cfg.epsilon)) * radius;
}

ArmIndex run_ucbf(Session& session, const UcbFConfig& cfg) {
  require(session.fresh(), "run_ucbf needs a fresh session");
  require(cfg.C > 0.0 && cfg.zeta > 0.0 && cfg.c > 0.0, "UCB-F constants must be positive");
  require(cfg.delta > 0.0 && cfg.delta < 1.0, "delta must lie in (0, 1)");
  const std::uint64_t n = session.budget();
  const std::uint64_t want = cfg.num_arms ? *cfg.num_arms : ucbf_arm_count(cfg.beta, n);
  require(want >= 1, "UCB-F needs at least one arm");
  const std::uint64_t arms = draw_initial(session, want);

  // Fixed horizon: an arm's index only moves when that arm is pulled.
  ArgmaxTracker tracker(arms);
  for (ArmIndex k = 0; k < arms; ++k) {
    tracker.set(k, ucbf_index(session.arm_stats(k), cfg, n));
  }
  while (session.remaining() > 0) {
    const ArmIndex k = tracker.best();
    session.pull_arm(k, 1);
    tracker.set(k, ucbf_index(session.arm_stats(k), cfg, n));
  }
  return recommend(session, cfg.recommendation);
}

ArmIndex run_lilucb(Session& session, const LilUcbConfig& cfg,
                    const SiriSchedule& sched) {
  require(session.fresh(), "run_lilucb needs a fresh session");
  require(cfg.delta > 0.0 && cfg.delta < 1.0, "delta must lie in (0, 1)");
  require(cfg.epsilon >= 0.0 && cfg.beta > 0.0 && cfg.sigma > 0.0 &&
              cfg.delta_divisor >= 1.0,
          "lil'UCB parameters out of range");
  const std::uint64_t want = cfg.num_arms ? *cfg.num_arms : sched.arms;
  require(want >= 1, "lil'UCB needs at least one arm");
  const std::uint64_t arms = draw_initial(session, want);
  const double lambda =
      cfg.lambda ? *cfg.lambda : 1.0 + 10.0 / static_cast<double>(arms);

  ArgmaxTracker tracker(arms);
  for (ArmIndex k = 0; k < arms; ++k) {
    tracker.set(k, lilucb_index(session.arm_stats(k), cfg));
  }
  while (session.remaining() > 0) {
    const ArmIndex k = tracker.best();
    session.pull_arm(k, 1);
    const ArmStats stats = session.arm_stats(k);
    tracker.set(k, lilucb_index(stats, cfg));
    if (cfg.stopping_rule && arms > 1) {
      const double others = static_cast<double>(session.time() - stats.pulls);
      if (static_cast<double>(stats.pulls) >= 1.0 + lambda * others) break;
    }
  }
  return session.most_pulled_arm();
}

ArmIndex run_uniform(Session& session, std::uint64_t num_arms) {
  require(session.fresh(), "run_uniform needs a fresh session");
  require(num_arms >= 1, "uniform allocation needs at least one arm");
  if (num_arms > session.budget()) {
    fail(ErrorCode::kBudgetTooSmall, "uniform allocation needs num_arms <= n");
  }
  const std::uint64_t per_arm = session.budget() / num_arms;
  for (std::uint64_t i = 0; i < num_arms; ++i) {
    const ArmIndex k = session.pull_new_arm().first;
    session.pull_arm(k, per_arm - 1);
  }
  return session.best_empirical_arm();
}

}  // namespace siri
