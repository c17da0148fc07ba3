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


#include "siri/siri.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "siri/argmax.hpp"
#include "siri/status.hpp"

namespace siri {
namespace {

std::uint64_t ceil_to_count(double x) {
  require(std::isfinite(x) && x < 1.8e19, "arm count overflows");
  const double c = std::ceil(x);
  return c < 1.0 ? 1 : static_cast<std::uint64_t>(c);
}

double bonus(const ArmStats& stats, double scale, double linear_coeff,
             const SiriSchedule& sched, const SiriConfig& cfg) {
  const double t = static_cast<double>(stats.pulls);
  const double l = confidence_log(stats.pulls, sched, cfg);
  return 2.0 * scale * std::sqrt(cfg.C / t * l) + linear_coeff * cfg.C / t * l;
}

}  // namespace

void validate(const SiriConfig& cfg) {
  require(std::isfinite(cfg.beta) && cfg.beta > 0.0, "beta must be positive");
  require(std::isfinite(cfg.C) && cfg.C > 0.0, "C must be positive");
  require(cfg.delta > 0.0 && cfg.delta < 1.0, "delta must lie in (0, 1)");
  require(std::isfinite(cfg.A) && cfg.A > 0.0, "A must be positive");
  require(!cfg.arms_override || *cfg.arms_override >= 1, "arm override must be >= 1");
}

double schedule_scale(const SiriConfig& cfg, std::uint64_t n) {
  const double log_n = std::log(static_cast<double>(n));
  if (cfg.beta < 2.0) return cfg.A;
  if (cfg.beta == 2.0) return cfg.A / (log_n * log_n);
  return cfg.A / log_n;
}

SiriSchedule schedule_for_arms(const SiriConfig& cfg, std::uint64_t n,
                               std::uint64_t arms) {
  validate(cfg);
  require(n >= 2, "schedule needs n >= 2");
  require(arms >= 1, "schedule needs at least one arm");
  if (arms > n) {
    fail(ErrorCode::kBudgetTooSmall, "arm count " + std::to_string(arms) +
                                         " exceeds budget " + std::to_string(n));
  }
  SiriSchedule s;
  s.b = std::min(cfg.beta, 2.0);
  s.a_n = schedule_scale(cfg, n);
  s.arms = arms;
  s.t_bar = static_cast<int>(std::bit_width(arms)) - 1;
  s.log_arg_scale = std::exp2(2.0 * s.t_bar / s.b);
  return s;
}

SiriSchedule derive_schedule(const SiriConfig& cfg, std::uint64_t n) {
  validate(cfg);
  require(n >= 2, "schedule needs n >= 2");
  if (cfg.arms_override) return schedule_for_arms(cfg, n, *cfg.arms_override);
  const double b = std::min(cfg.beta, 2.0);
  const double raw = schedule_scale(cfg, n) * std::pow(static_cast<double>(n), b / 2.0);
  return schedule_for_arms(cfg, n, ceil_to_count(raw));
}

SiriSchedule derive_bernstein_schedule(const SiriConfig& cfg, std::uint64_t n) {
  validate(cfg);
  require(n >= 2, "schedule needs n >= 2");
  if (cfg.arms_override) return schedule_for_arms(cfg, n, *cfg.arms_override);
  const double nd = static_cast<double>(n);
  const double exponent = cfg.bernstein_exponent == BernsteinExponent::kBetaHalf
                              ? cfg.beta / 2.0
                              : std::min(cfg.beta, 2.0) / 2.0;
  const double raw =
      std::min(nd / std::log(nd), schedule_scale(cfg, n) * std::pow(nd, exponent));
  return schedule_for_arms(cfg, n, ceil_to_count(raw));
}

double confidence_log(std::uint64_t pulls, const SiriSchedule& sched,
                      const SiriConfig& cfg) {
  const double arg = sched.log_arg_scale / (static_cast<double>(pulls) * cfg.delta);
  return arg > 1.0 ? std::log(arg) : 0.0;
}

double ucb_index(const ArmStats& stats, const SiriSchedule& sched,
                 const SiriConfig& cfg) {
  require(stats.pulls >= 1, "index needs at least one pull");
  return stats.mean_hat + bonus(stats, 1.0, 2.0, sched, cfg);
}

double bernstein_index(const ArmStats& stats, const SiriSchedule& sched,
                       const SiriConfig& cfg) {
  require(stats.pulls >= 1, "index needs at least one pull");
  return stats.mean_hat + bonus(stats, std::sqrt(stats.var_hat), 4.0, sched, cfg);
}

ArmIndex run_siri(Session& session, const SiriSchedule& sched,
                  const IndexFunction& index) {
  require(session.fresh(), "run_siri needs a fresh session");
  if (sched.arms > session.budget()) {
    fail(ErrorCode::kBudgetTooSmall, "arm count exceeds session budget");
  }
  ArgmaxTracker tracker(sched.arms);
  for (std::uint64_t i = 0; i < sched.arms; ++i) {
    const ArmIndex k = session.pull_new_arm().first;
    tracker.set(k, index(session.arm_stats(k)));
  }
  // Only the pulled arm's statistics change, so the other indices stay valid.
  while (session.remaining() > 0) {
    const ArmIndex k = tracker.best();
    session.pull_arm(k, session.pulls(k));
    tracker.set(k, index(session.arm_stats(k)));
  }
  return session.most_pulled_arm();
}

ArmIndex run_siri(Session& session, const SiriConfig& cfg, IndexKind kind) {
  const std::uint64_t n = session.budget();
  if (kind == IndexKind::kHoeffding) {
    const SiriSchedule sched = derive_schedule(cfg, n);
    return run_siri(session, sched, [&](const ArmStats& s) {
      return ucb_index(s, sched, cfg);
    });
  }
  const SiriSchedule sched = derive_bernstein_schedule(cfg, n);
  return run_siri(session, sched, [&](const ArmStats& s) {
    return bernstein_index(s, sched, cfg);
  });
}

}  // namespace siri
