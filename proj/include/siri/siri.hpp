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


// SiRI: draw a fixed number of arms from the reservoir, then repeatedly
// double the pull count of the arm with the largest confidence index.

#ifndef SIRI_SIRI_HPP_
#define SIRI_SIRI_HPP_

#include <cstdint>
#include <functional>
#include <optional>

#include "siri/engine.hpp"

namespace siri {

enum class IndexKind { kHoeffding, kBernstein };

// Exponent used by the Bernstein arm count min(n / ln n, A(n) n^{e}).
enum class BernsteinExponent {
  kBetaHalf,  // e = beta / 2
  kBHalf,     // e = min(beta, 2) / 2
};

struct SiriConfig {
  double beta = 1.0;
  double C = 1.0;
  double delta = 0.01;
  double A = 0.3;
  // Replaces the derived arm count (schedule constants follow from it).
  std::optional<std::uint64_t> arms_override;
  BernsteinExponent bernstein_exponent = BernsteinExponent::kBetaHalf;
};

struct SiriSchedule {
  double b = 1.0;               // min(beta, 2)
  double a_n = 0.3;             // A(n)
  std::uint64_t arms = 1;       // number of reservoir arms
  int t_bar = 0;                // floor(log2(arms))
  double log_arg_scale = 1.0;   // 2^{2 t_bar / b}
};

void validate(const SiriConfig& cfg);

// A if beta < 2, A / ln(n)^2 if beta == 2, A / ln(n) if beta > 2.
double schedule_scale(const SiriConfig& cfg, std::uint64_t n);

// Throws Error(kBudgetTooSmall) if the arm count exceeds n.
SiriSchedule derive_schedule(const SiriConfig& cfg, std::uint64_t n);
SiriSchedule derive_bernstein_schedule(const SiriConfig& cfg, std::uint64_t n);
// Schedule constants for an explicit arm count.
SiriSchedule schedule_for_arms(const SiriConfig& cfg, std::uint64_t n,
                               std::uint64_t arms);

// ln(2^{2 t_bar / b} / (T delta)), clamped at 0.
double confidence_log(std::uint64_t pulls, const SiriSchedule& sched,
                      const SiriConfig& cfg);

double ucb_index(const ArmStats& stats, const SiriSchedule& sched,
                 const SiriConfig& cfg);
double bernstein_index(const ArmStats& stats, const SiriSchedule& sched,
                       const SiriConfig& cfg);

using IndexFunction = std::function<double(const ArmStats&)>;

// Runs the doubling loop on a fresh session with sched.arms arms and returns
// the most pulled arm.
ArmIndex run_siri(Session& session, const SiriSchedule& sched,
                  const IndexFunction& index);

ArmIndex run_siri(Session& session, const SiriConfig& cfg, IndexKind kind);

}  // namespace siri

#endif  // SIRI_SIRI_HPP_
