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


#include "siri/validate.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

#include "siri/adapt.hpp"
#include "siri/harness.hpp"
#include "siri/status.hpp"

namespace siri {
namespace {

// Stream id tags, one per validator, so suites never share draws.
constexpr std::uint32_t kXi1Tag = 0xFFFFFF01u;
constexpr std::uint32_t kCoverageTag = 0xFFFFFF02u;
constexpr std::uint32_t kRegularityTag = 0xFFFFFF03u;

constexpr int kMaxCoverageLog2 = 16;

double binomial_se(double p, std::uint64_t trials) {
  const double q = std::clamp(p, 0.0, 1.0);
  return std::sqrt(q * (1.0 - q) / static_cast<double>(trials));
}

}  // namespace

std::uint64_t IntervalCensus::total() const {
  std::uint64_t sum = n_star + n_below;
  for (std::uint64_t c : counts) sum += c;
  return sum;
}

std::uint64_t IntervalCensus::i_star() const {
  return n_star + (counts.empty() ? 0 : counts.back());
}

IntervalCensus census_arms(const Reservoir& reservoir, std::uint64_t arms, Stream& stream) {
  if (!reservoir.has_closed_form()) {
    fail(ErrorCode::kUnsupportedSpec, "census needs a closed-form mean law");
  }
  IntervalCensus census;
  census.t_bar = arms == 0 ? 0 : static_cast<int>(std::bit_width(arms)) - 1;
  census.counts.assign(census.t_bar + 1, 0);
  const double top = reservoir.mu_star();
  for (std::uint64_t i = 0; i < arms; ++i) {
    const double mu = reservoir.draw_arm(stream, i).true_mean;
    const double q = reservoir.tail_probability(std::max(top - mu, 0.0));
    if (q <= 0.0) {
      ++census.n_star;
      continue;
    }
    const double level = -std::log2(q);
    if (level < 0.0) {
      ++census.n_below;
      continue;
    }
    const double u = std::floor(level);
    if (u <= census.t_bar) {
      ++census.counts[static_cast<std::size_t>(u)];
    } else {
      ++census.n_star;
    }
  }
  return census;
}

double xi1_count_tolerance(int t_bar, int u, double delta) {
  const double depth = static_cast<double>(t_bar - u + 1);
  const double log_inv = std::log(1.0 / delta);
  return std::sqrt(depth * std::exp2(t_bar - u) * log_inv) + depth * log_inv;
}

double xi1_star_bound(double delta) {
  const double log_inv = std::log(1.0 / delta);
  return 1.0 + 2.0 * std::sqrt(log_inv) + 2.0 * log_inv;
}

bool xi1_holds(const IntervalCensus& census, double delta) {
  for (int u = 0; u <= census.t_bar; ++u) {
    const double expected = std::exp2(census.t_bar - u - 1);
    const double dev = std::abs(static_cast<double>(census.counts[u]) - expected);
    if (dev > xi1_count_tolerance(census.t_bar, u, delta)) return false;
  }
  return static_cast<double>(census.i_star()) <= xi1_star_bound(delta);
}

Xi1Report check_xi1(const Reservoir& reservoir, std::uint64_t arms, double delta,
                    std::uint64_t trials, std::uint64_t seed) {
  require(trials >= 1, "xi1 check needs trials >= 1");
  require(delta > 0.0 && delta < 1.0, "delta must lie in (0, 1)");
  if (!reservoir.has_closed_form()) {
    fail(ErrorCode::kUnsupportedSpec, "xi1 check needs a closed-form mean law");
  }
  Xi1Report report;
  report.trials = trials;
  const double e = std::numbers::e;
  report.bound = 1.0 - (1.0 + e / (e - 1.0)) * delta;
  if (report.bound <= 0.0) {
    report.applicable = false;
    report.passed = true;
    return report;
  }
  Stream stream(seed, StreamId{kXi1Tag, 0});
  for (std::uint64_t i = 0; i < trials; ++i) {
    if (xi1_holds(census_arms(reservoir, arms, stream), delta)) ++report.passes;
  }
  report.pass_rate = static_cast<double>(report.passes) / static_cast<double>(trials);
  report.std_error = binomial_se(report.bound, trials);
  report.passed = report.pass_rate >= report.bound - 3.0 * report.std_error;
  return report;
}

double coverage_radius(double C, double delta, const SiriSchedule& sched, int v) {
  const double inv_t = std::exp2(-v);
  const double l = (2.0 * sched.t_bar / sched.b - v) * std::numbers::ln2 +
                   std::log(1.0 / delta);
  return 2.0 * std::sqrt(C * inv_t * l) + 2.0 * C * inv_t * l;
}

CoverageReport check_index_coverage(const Reservoir& reservoir, double arm_mean,
                                    double C, double delta, const SiriSchedule& sched,
                                    std::uint64_t trials, std::uint64_t seed,
                                    int max_v) {
  require(trials >= 1, "coverage check needs trials >= 1");
  require(delta > 0.0 && delta < 1.0, "delta must lie in (0, 1)");
  require(C > 0.0, "C must be positive");
  const ArmHandle arm = reservoir.make_arm(arm_mean);
  const double limit = 2.0 * sched.t_bar / sched.b;
  int last = std::min(static_cast<int>(std::floor(limit)) + 1, kMaxCoverageLog2);
  if (max_v >= 0) last = std::min(last, max_v);

  CoverageReport report;
  for (int v = 0; v <= last; ++v) {
    CoverageRow row;
    row.v = v;
    row.samples = 1ull << v;
    row.trials = trials;
    if (v > limit) {
      row.skipped = true;
      report.rows.push_back(row);
      continue;
    }
    row.radius = coverage_radius(C, delta, sched, v);
    row.budget = std::exp2(v - limit) * delta;
    row.threshold = row.budget + 3.0 * binomial_se(row.budget, trials);
    Stream stream(seed, StreamId{kCoverageTag, static_cast<std::uint32_t>(v)});
    for (std::uint64_t i = 0; i < trials; ++i) {
      double sum = 0.0;
      for (std::uint64_t s = 0; s < row.samples; ++s) {
        sum += reservoir.sample_reward(arm, stream);
      }
      const double dev = std::abs(sum / static_cast<double>(row.samples) - arm.effective_mean);
      if (dev > row.radius) ++row.violations;
    }
    row.rate = static_cast<double>(row.violations) / static_cast<double>(trials);
    row.passed = row.rate <= row.threshold;
    report.passed = report.passed && row.passed;
    report.rows.push_back(row);
  }
  return report;
}

BetaConcentrationReport check_beta_concentration(const Reservoir& reservoir,
                                                 double beta_true,
                                                 const std::vector<std::uint64_t>& Ns,
                                                 double epsilon, std::uint64_t trials,
                                                 std::uint64_t seed) {
  require(trials >= 1, "beta concentration check needs trials >= 1");
  require(!Ns.empty(), "beta concentration check needs at least one N");
  BetaConcentrationReport report;
  report.Ns = Ns;
  report.trials = trials;
  report.low_power = trials < 30;
  for (std::uint64_t N : Ns) {
    std::vector<double> errors, estimates;
    errors.reserve(trials);
    estimates.reserve(trials);
    for (std::uint64_t i = 0; i < trials; ++i) {
      const BetaEstimate est = estimate_beta(reservoir, N, epsilon,
                                             Stream(seed, replication_stream_id(N, i)));
      estimates.push_back(est.beta_hat);
      errors.push_back(std::abs(est.beta_hat - beta_true));
    }
    report.median_abs_error.push_back(quantile(errors, 0.5));
    report.median_beta_hat.push_back(quantile(estimates, 0.5));
  }
  for (std::size_t i = 1; i < report.median_abs_error.size(); ++i) {
    if (report.median_abs_error[i] > report.median_abs_error[i - 1]) ++report.inversions;
  }
  report.passed = report.inversions <= 1;
  return report;
}

RegularityReport check_regularity(const Reservoir& reservoir, std::uint64_t draws,
                                  std::uint64_t seed) {
  require(draws >= 1, "regularity check needs draws >= 1");
  RegularityReport report;
  report.constants = reservoir.regularity();
  report.draws = draws;
  const RegularityConstants& rc = report.constants;

  for (int j = 0; j <= 120; ++j) {
    const double eps = rc.b_tilde * std::exp2(-j / 4.0);
    const double tail = reservoir.tail_probability(eps);
    const double scale = std::pow(eps, rc.beta);
    const double over = tail / (rc.e_hi * scale) - 1.0;
    const double under = 1.0 - tail / (rc.e_lo * scale);
    report.max_bound_violation = std::max({report.max_bound_violation, over, under});
  }
  for (int j = 1; j < 1000; ++j) {
    const double u = j / 1000.0;
    const double err =
        std::abs(reservoir.tail_probability(reservoir.quantile_g(u)) - u);
    report.max_duality_error = std::max(report.max_duality_error, err);
  }

  const double checkpoints[] = {0.5, 0.25, 0.1, 0.05, 0.01};
  std::vector<std::uint64_t> hits(std::size(checkpoints), 0);
  Stream stream(seed, StreamId{kRegularityTag, 0});
  for (std::uint64_t i = 0; i < draws; ++i) {
    const double gap = rc.mu_star - reservoir.draw_arm(stream, i).true_mean;
    for (std::size_t c = 0; c < std::size(checkpoints); ++c) {
      if (gap < checkpoints[c]) ++hits[c];
    }
  }
  for (std::size_t c = 0; c < std::size(checkpoints); ++c) {
    const double p = reservoir.tail_probability(checkpoints[c]);
    const double se = binomial_se(p, draws);
    const double freq = static_cast<double>(hits[c]) / static_cast<double>(draws);
    const double z = se > 0.0 ? std::abs(freq - p) / se : (freq == p ? 0.0 : INFINITY);
    report.max_empirical_z = std::max(report.max_empirical_z, z);
  }
  report.passed = report.max_bound_violation <= 1e-9 && report.max_duality_error <= 1e-12 &&
                  report.max_empirical_z <= 3.0;
  return report;
}

}  // namespace siri
