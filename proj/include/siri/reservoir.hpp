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


// Arm reservoirs: the law of arm means plus the reward noise attached to
// every arm drawn from it.

#ifndef SIRI_RESERVOIR_HPP_
#define SIRI_RESERVOIR_HPP_

#include <cstdint>
#include <variant>
#include <vector>

#include "siri/random.hpp"

namespace siri {

struct BetaLaw {
  double shape_x = 1.0;
  double shape_y = 1.0;
};

struct Uniform01 {};

// The k-th drawn arm takes means[k % size]. Used for deterministic traces.
struct TabulatedMeans {
  std::vector<double> means;
};

using MeanLaw = std::variant<BetaLaw, Uniform01, TabulatedMeans>;

enum class TruncationMode { kReject, kClip };

struct TruncatedGaussian {
  double sd = 1.0;
  double low = 0.0;
  double high = 1.0;
  TruncationMode mode = TruncationMode::kReject;
};

struct BernoulliReward {};
struct Deterministic {};

using NoiseModel = std::variant<TruncatedGaussian, BernoulliReward, Deterministic>;

struct ReservoirSpec {
  MeanLaw mean_law = Uniform01{};
  NoiseModel noise = TruncatedGaussian{};
  double reward_bound = 1.0;  // every reward lies in [-C, C]
};

// Tail regularity at the right end point:
//   E_lo * eps^beta <= P(mu > mu_star - eps) <= E_hi * eps^beta, eps in (0, B].
struct RegularityConstants {
  double beta = 1.0;
  double e_lo = 1.0;
  double e_hi = 1.0;
  double b_tilde = 0.5;
  double mu_star = 1.0;
};

struct ArmHandle {
  double true_mean = 0.0;       // pre-noise mean, hidden from algorithms
  double effective_mean = 0.0;  // expectation of the observed reward
  double accept_prob = 1.0;     // truncated Gaussian mass of [low, high]
};

class Reservoir {
 public:
  // Throws Error(kInvalidArgument) when the spec violates the reward bound.
  explicit Reservoir(ReservoirSpec spec);

  const ReservoirSpec& spec() const noexcept { return spec_; }
  double reward_bound() const noexcept { return spec_.reward_bound; }

  // Right end point of the mean law's support.
  double mu_star() const noexcept { return support_high_; }
  double support_low() const noexcept { return support_low_; }
  double support_width() const noexcept { return support_high_ - support_low_; }

  // Expected observed reward of an arm with the given pre-noise mean. Equal
  // to the mean itself except under truncated Gaussian noise.
  double effective_mean(double true_mean) const;
  // Reference for simple regret: effective_mean(mu_star()).
  double regret_reference() const noexcept { return regret_reference_; }

  ArmHandle draw_arm(Stream& stream, std::uint64_t ordinal) const;
  ArmHandle make_arm(double true_mean) const;
  double sample_reward(const ArmHandle& arm, Stream& stream) const;

  // P(mu > mu_star - eps) under the mean law.
  double tail_probability(double eps) const;
  // G(u) = mu_star - F^{-1}(1 - u).
  double quantile_g(double u) const;

  // True for BetaLaw and Uniform01.
  bool has_closed_form() const noexcept;
  // Throws Error(kUnsupportedSpec) for tabulated laws.
  RegularityConstants regularity() const;

 private:
  ReservoirSpec spec_;
  double support_low_ = 0.0;
  double support_high_ = 1.0;
  double regret_reference_ = 1.0;
  std::vector<double> sorted_means_;
};

}  // namespace siri

#endif  // SIRI_RESERVOIR_HPP_
