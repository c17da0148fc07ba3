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


#include "siri/engine.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <string>

#include "siri/status.hpp"

namespace siri {

Session::Session(const Reservoir& reservoir, std::uint64_t budget, Stream stream,
                 bool log_rewards)
    : reservoir_(&reservoir),
      budget_(budget),
      stream_(stream),
      log_rewards_(log_rewards) {
  require(budget >= 1, "session budget must be at least 1");
}

void Session::check_arm(ArmIndex k) const {
  if (k >= arms_.size()) {
    fail(ErrorCode::kUnknownArm, "arm " + std::to_string(k) + " not drawn (K = " +
                                     std::to_string(arms_.size()) + ")");
  }
}

void Session::record(ArmIndex k, double reward) {
  ArmSlot& slot = arms_[k];
  ++slot.pulls;
  ++t_;
  const double delta = reward - slot.mean;
  slot.mean += delta / static_cast<double>(slot.pulls);
  slot.m2 += delta * (reward - slot.mean);
  if (log_rewards_) log_.push_back({k, slot.pulls, reward});
}

std::pair<ArmIndex, double> Session::pull_new_arm() {
  if (t_ >= budget_) fail(ErrorCode::kBudgetExhausted, "budget exhausted");
  const ArmIndex k = arms_.size();
  arms_.push_back({reservoir_->draw_arm(stream_, k)});
  const double reward = reservoir_->sample_reward(arms_[k].handle, stream_);
  record(k, reward);
  return {k, reward};
}

std::uint64_t Session::pull_arm(ArmIndex k, std::uint64_t times) {
  check_arm(k);
  const std::uint64_t count = std::min(times, remaining());
  const ArmHandle handle = arms_[k].handle;
  for (std::uint64_t i = 0; i < count; ++i) {
    record(k, reservoir_->sample_reward(handle, stream_));
  }
  return count;
}

std::uint64_t Session::pulls(ArmIndex k) const {
  check_arm(k);
  return arms_[k].pulls;
}

ArmStats Session::arm_stats(ArmIndex k) const {
  check_arm(k);
  const ArmSlot& slot = arms_[k];
  if (slot.pulls == 0) fail(ErrorCode::kNoSamples, "arm has no samples");
  const double var = slot.m2 / static_cast<double>(slot.pulls);
  return {k, slot.pulls, slot.mean, var > 0.0 ? var : 0.0};
}

ArmIndex Session::most_pulled_arm() const {
  if (arms_.empty()) fail(ErrorCode::kNoSamples, "no arms drawn");
  ArmIndex best = 0;
  for (ArmIndex k = 1; k < arms_.size(); ++k) {
    if (arms_[k].pulls > arms_[best].pulls) best = k;
  }
  return best;
}

ArmIndex Session::best_empirical_arm() const {
  if (arms_.empty()) fail(ErrorCode::kNoSamples, "no arms drawn");
  ArmIndex best = arms_.size();
  for (ArmIndex k = 0; k < arms_.size(); ++k) {
    if (arms_[k].pulls == 0) continue;
    if (best == arms_.size() || arms_[k].mean > arms_[best].mean) best = k;
  }
  if (best == arms_.size()) fail(ErrorCode::kNoSamples, "no arm has samples");
  return best;
}

const ArmHandle& Session::arm(ArmIndex k) const {
  check_arm(k);
  return arms_[k].handle;
}

double Session::simple_regret(ArmIndex k_hat) const {
  check_arm(k_hat);
  return reservoir_->regret_reference() - arms_[k_hat].handle.effective_mean;
}

Outcome Session::outcome(ArmIndex k_hat) const {
  check_arm(k_hat);
  Outcome out;
  out.chosen = k_hat;
  out.regret = simple_regret(k_hat);
  out.chosen_mean = arms_[k_hat].handle.true_mean;
  out.chosen_pulls = arms_[k_hat].pulls;
  out.arms_drawn = arms_.size();
  out.samples_used = t_;
  return out;
}

void Session::write_reward_log_csv(std::ostream& out) const {
  out << "arm,pull_index,reward\n";
  char buf[64];
  for (const RewardLogEntry& e : log_) {
    std::snprintf(buf, sizeof buf, "%.17g", e.reward);
    out << e.arm << ',' << e.pull_index << ',' << buf << '\n';
  }
}

}  // namespace siri
