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


// Budget-accounted bandit session.

#ifndef SIRI_ENGINE_HPP_
#define SIRI_ENGINE_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "siri/random.hpp"
#include "siri/reservoir.hpp"

namespace siri {

using ArmIndex = std::size_t;

struct ArmStats {
  ArmIndex k = 0;
  std::uint64_t pulls = 0;
  double mean_hat = 0.0;
  double var_hat = 0.0;  // biased, 1/T normalization
};

struct RewardLogEntry {
  ArmIndex arm;
  std::uint64_t pull_index;  // 1-based pull count of that arm
  double reward;
};

// Result of one fixed-budget run, evaluated with oracle access.
struct Outcome {
  ArmIndex chosen = 0;
  double regret = 0.0;
  double chosen_mean = 0.0;
  std::uint64_t chosen_pulls = 0;
  std::uint64_t arms_drawn = 0;
  std::uint64_t samples_used = 0;
};

// Single-owner. The reservoir must outlive the session.
class Session {
 public:
  Session(const Reservoir& reservoir, std::uint64_t budget, Stream stream,
          bool log_rewards = false);

  std::uint64_t budget() const noexcept { return budget_; }
  std::uint64_t time() const noexcept { return t_; }
  std::uint64_t remaining() const noexcept { return budget_ - t_; }
  std::size_t num_arms() const noexcept { return arms_.size(); }
  bool fresh() const noexcept { return t_ == 0 && arms_.empty(); }
  const Reservoir& reservoir() const noexcept { return *reservoir_; }

  // Throws Error(kBudgetExhausted) when t == n.
  std::pair<ArmIndex, double> pull_new_arm();
  // Pulls min(times, n - t) samples; throws Error(kUnknownArm) for k >= K.
  std::uint64_t pull_arm(ArmIndex k, std::uint64_t times);

  std::uint64_t pulls(ArmIndex k) const;
  // Throws Error(kNoSamples) if the arm was never pulled.
  ArmStats arm_stats(ArmIndex k) const;
  // Lowest index among the most pulled arms.
  ArmIndex most_pulled_arm() const;
  // Lowest index among the best empirical means.
  ArmIndex best_empirical_arm() const;

  // Oracle access; algorithms must not call these.
  const ArmHandle& arm(ArmIndex k) const;
  double simple_regret(ArmIndex k_hat) const;
  Outcome outcome(ArmIndex k_hat) const;

  bool logging() const noexcept { return log_rewards_; }
  const std::vector<RewardLogEntry>& reward_log() const noexcept { return log_; }
  // Columns: arm,pull_index,reward.
  void write_reward_log_csv(std::ostream& out) const;

  Stream& stream() noexcept { return stream_; }

 private:
  struct ArmSlot {
    ArmHandle handle;
    std::uint64_t pulls = 0;
    double mean = 0.0;
    double m2 = 0.0;  // Welford sum of squared deviations
  };

  void check_arm(ArmIndex k) const;
  void record(ArmIndex k, double reward);

  const Reservoir* reservoir_;
  std::uint64_t budget_;
  std::uint64_t t_ = 0;
  Stream stream_;
  bool log_rewards_;
  std::vector<ArmSlot> arms_;
  std::vector<RewardLogEntry> log_;
};

}  // namespace siri

#endif  // SIRI_ENGINE_HPP_
