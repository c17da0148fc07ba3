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


// Comparator strategies evaluated on simple regret.

#ifndef SIRI_BASELINES_HPP_
#define SIRI_BASELINES_HPP_

#include <cstdint>
#include <optional>

#include "siri/engine.hpp"
#include "siri/siri.hpp"

namespace siri {

enum class Recommendation { kMostPulled, kBestEmpiricalMean };

// UCB-V style index on a fixed set of arms with a fixed-horizon exploration
// level E = zeta * ln(n / delta):
//   mu_hat + sqrt(2 var_hat E / T) + 3 c C E / T
struct UcbFConfig {
  double beta = 1.0;
  double C = 1.0;
  double delta = 0.01;
  double zeta = 1.0;
  double c = 1.0;
  std::optional<std::uint64_t> num_arms;  // default ceil(n^{beta / (beta + 1)})
  Recommendation recommendation = Recommendation::kMostPulled;
};

// lil'UCB with the heuristic defaults (epsilon = 0, beta = 1/2,
// lambda = 1 + 10 / K, confidence delta / 5):
//   mu_hat + (1 + beta)(1 + sqrt(eps))
//            * sqrt(2 sigma^2 (1 + eps) ln(max(1, ln((1 + eps) T)) / delta') / T)
// Stops early once an arm holds T_i >= 1 + lambda * sum_{j != i} T_j.
struct LilUcbConfig {
  double delta = 0.01;
  double epsilon = 0.0;
  double beta = 0.5;
  std::optional<double> lambda;  // default 1 + 10 / K
  double sigma = 0.5;            // sub-Gaussian scale of the rewards
  double delta_divisor = 5.0;
  bool stopping_rule = true;
  std::optional<std::uint64_t> num_arms;  // default: the SiRI arm count
};

std::uint64_t ucbf_arm_count(double beta, std::uint64_t n);

double ucbf_index(const ArmStats& stats, const UcbFConfig& cfg, std::uint64_t n);
double lilucb_index(const ArmStats& stats, const LilUcbConfig& cfg);

ArmIndex run_ucbf(Session& session, const UcbFConfig& cfg);
ArmIndex run_lilucb(Session& session, const LilUcbConfig& cfg,
                    const SiriSchedule& sched);
// floor(n / num_arms) pulls each, then the best empirical mean.
ArmIndex run_uniform(Session& session, std::uint64_t num_arms);

}  // namespace siri

#endif  // SIRI_BASELINES_HPP_
