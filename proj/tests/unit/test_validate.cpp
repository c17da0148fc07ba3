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


#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include <boost/math/distributions/binomial.hpp>
#include <boost/math/distributions/chi_squared.hpp>

#include "siri/validate.hpp"
#include "test_util.hpp"

namespace siri {
namespace {

using testing::error_of;

Reservoir uniform(NoiseModel noise = Deterministic{}) {
  return Reservoir(ReservoirSpec{Uniform01{}, noise, 1.0});
}

TEST_CASE("census partitions the draws") {
  for (const MeanLaw& law : std::vector<MeanLaw>{Uniform01{}, BetaLaw{1.0, 3.0},
                                                  BetaLaw{2.0, 2.0}}) {
    const Reservoir r(ReservoirSpec{law, Deterministic{}, 1.0});
    Stream s(1, {0, 0});
    for (std::uint64_t arms : {1u, 7u, 256u, 1000u}) {
      const IntervalCensus c = census_arms(r, arms, s);
      CHECK(c.total() == arms);
      CHECK(c.counts.size() == static_cast<std::size_t>(c.t_bar) + 1);
      CHECK(c.n_below == 0);
      CHECK(c.i_star() >= c.n_star);
    }
  }
}

TEST_CASE("census edge cases") {
  Stream s(1, {0, 0});
  const IntervalCensus empty = census_arms(uniform(), 0, s);
  CHECK(empty.total() == 0);
  for (auto c : empty.counts) CHECK(c == 0);
  const Reservoir table(ReservoirSpec{TabulatedMeans{{0.5}}, Deterministic{}, 1.0});
  CHECK(error_of([&] { census_arms(table, 4, s); }) == ErrorCode::kUnsupportedSpec);
}

TEST_CASE("census counts have the right means") {
  const int t_bar = 8;
  const std::uint64_t arms = 1u << t_bar;
  const Reservoir r = uniform();
  Stream s(2, {0, 0});
  const int trials = 2000;
  std::vector<double> sums(t_bar + 1, 0.0);
  for (int i = 0; i < trials; ++i) {
    const IntervalCensus c = census_arms(r, arms, s);
    for (int u = 0; u <= t_bar; ++u) sums[u] += c.counts[u];
  }
  for (int u = 0; u <= t_bar; ++u) {
    const double p = std::exp2(-u - 1);
    const double expected = std::exp2(t_bar - u - 1);
    const double se = std::sqrt(arms * p * (1 - p) / trials);
    CAPTURE(u);
    CHECK(std::fabs(sums[u] / trials - expected) <= 4.0 * se);
  }
}

TEST_CASE("census counts follow the binomial law") {
  const int t_bar = 8;
  const std::uint64_t arms = 1u << t_bar;
  const Reservoir r = uniform();
  Stream s(3, {0, 0});
  const int trials = 2000;
  std::vector<std::vector<std::uint64_t>> draws(t_bar + 1);
  for (int i = 0; i < trials; ++i) {
    const IntervalCensus c = census_arms(r, arms, s);
    for (int u = 0; u <= t_bar; ++u) draws[u].push_back(c.counts[u]);
  }
  for (int u = 0; u <= t_bar - 3; ++u) {
    const boost::math::binomial_distribution<double> law(double(arms), std::exp2(-u - 1));
    // Cells are pooled until each expects at least 5 observations.
    std::vector<std::pair<double, double>> cells;  // (observed, expected)
    double obs = 0.0, expct = 0.0;
    for (std::uint64_t k = 0; k <= arms; ++k) {
      std::uint64_t hits = 0;
      for (auto x : draws[u]) hits += x == k ? 1 : 0;
      obs += static_cast<double>(hits);
      expct += trials * boost::math::pdf(law, double(k));
      if (expct >= 5.0) {
        cells.emplace_back(obs, expct);
        obs = expct = 0.0;
      }
    }
    if (!cells.empty()) {
      cells.back().first += obs;
      cells.back().second += expct;
    }
    double chi2 = 0.0;
    for (const auto& [o, e] : cells) chi2 += (o - e) * (o - e) / e;
    const boost::math::chi_squared_distribution<double> ref(double(cells.size() - 1));
    CAPTURE(u);
    CHECK(chi2 < boost::math::quantile(ref, 0.99));
  }
}

TEST_CASE("xi1 tolerances") {
  CHECK(xi1_star_bound(0.05) ==
        doctest::Approx(1.0 + 2.0 * std::sqrt(std::log(20.0)) + 2.0 * std::log(20.0)));
  CHECK(xi1_count_tolerance(8, 8, 0.05) ==
        doctest::Approx(std::sqrt(std::log(20.0)) + std::log(20.0)));
}

TEST_CASE("xi1 frequency at delta = 0.05") {
  const Xi1Report rep = check_xi1(uniform(), 256, 0.05, 2000, 1);
  CHECK(rep.applicable);
  CHECK(rep.bound == doctest::Approx(1.0 - (1.0 + M_E / (M_E - 1.0)) * 0.05));
  CHECK(rep.bound == doctest::Approx(0.87090).epsilon(1e-4));
  CHECK(rep.trials == 2000);
  CHECK(rep.pass_rate >= rep.bound - 3.0 * rep.std_error);
  CHECK(rep.passed);
}

TEST_CASE("xi1 degenerate inputs") {
  const Xi1Report vacuous = check_xi1(uniform(), 256, 0.9, 10, 1);
  CHECK_FALSE(vacuous.applicable);
  CHECK(error_of([] { check_xi1(uniform(), 256, 0.05, 0, 1); }) ==
        ErrorCode::kInvalidArgument);
  const Reservoir table(ReservoirSpec{TabulatedMeans{{0.5}}, Deterministic{}, 1.0});
  CHECK(error_of([&] { check_xi1(table, 256, 0.05, 10, 1); }) ==
        ErrorCode::kUnsupportedSpec);
}

SiriSchedule schedule_with(int t_bar, double beta) {
  SiriConfig cfg;
  cfg.beta = beta;
  return schedule_for_arms(cfg, 1u << 20, 1u << t_bar);
}

TEST_CASE("coverage radius matches the index bonus") {
  const SiriSchedule sched = schedule_with(6, 1.0);
  SiriConfig cfg;
  const ArmStats st{0, 8, 0.0, 0.0};
  CHECK(coverage_radius(1.0, 0.01, sched, 3) ==
        doctest::Approx(ucb_index(st, sched, cfg)).epsilon(1e-12));
}

TEST_CASE("deterministic samples never violate") {
  const CoverageReport rep =
      check_index_coverage(uniform(), 0.3, 1.0, 0.01, schedule_with(3, 1.0), 100, 1);
  CHECK(rep.passed);
  for (const auto& row : rep.rows) CHECK(row.violations == 0);
}

TEST_CASE("bernoulli coverage at v = 0") {
  const SiriSchedule sched = schedule_with(6, 1.0);
  const CoverageReport rep =
      check_index_coverage(uniform(BernoulliReward{}), 0.5, 1.0, 0.01, sched, 100000, 1, 0);
  REQUIRE(rep.rows.size() == 1);
  const CoverageRow& row = rep.rows.front();
  CHECK(row.v == 0);
  CHECK(row.budget == doctest::Approx(0.01 * std::exp2(-12)));
  CHECK(row.violations == 0);
  CHECK(row.passed);
}

TEST_CASE("coverage skips clamped levels") {
  const SiriSchedule sched = schedule_with(2, 1.0);  // 2 t_bar / b = 4
  const CoverageReport rep =
      check_index_coverage(uniform(BernoulliReward{}), 0.5, 1.0, 0.01, sched, 1000, 1);
  REQUIRE(rep.rows.size() == 6);
  CHECK_FALSE(rep.rows[4].skipped);
  CHECK(rep.rows[5].skipped);
  CHECK(rep.rows[5].v == 5);
  CHECK(rep.passed);
}

TEST_CASE("coverage under truncated gaussian noise") {
  const SiriSchedule sched = schedule_with(6, 1.0);
  const CoverageReport rep = check_index_coverage(uniform(TruncatedGaussian{}), 0.8, 1.0,
                                                  0.01, sched, 2000, 3);
  CHECK(rep.passed);
}

TEST_CASE("estimator concentration") {
  const Reservoir r(ReservoirSpec{BetaLaw{1.0, 1.0}, Deterministic{}, 1.0});
  const BetaConcentrationReport rep = check_beta_concentration(r, 1.0, {16, 64, 256}, 0.4, 200, 1);
  CHECK(rep.median_abs_error.size() == 3);
  CHECK(rep.median_abs_error[2] < rep.median_abs_error[0]);
  CHECK(rep.passed);
  CHECK_FALSE(rep.low_power);

  const BetaConcentrationReport tiny = check_beta_concentration(r, 1.0, {16}, 0.4, 1, 1);
  CHECK(tiny.low_power);
  CHECK(tiny.median_beta_hat.size() == 1);

  const Reservoir atom(ReservoirSpec{TabulatedMeans{{0.2}}, Deterministic{}, 1.0});
  const BetaConcentrationReport zero = check_beta_concentration(atom, 0.0, {16, 32}, 0.4, 10, 1);
  for (double m : zero.median_beta_hat) CHECK(m == 0.0);
  CHECK(error_of([&] { check_beta_concentration(r, 1.0, {16}, 0.4, 0, 1); }) ==
        ErrorCode::kInvalidArgument);
}

TEST_CASE("regularity of the closed-form laws") {
  for (const MeanLaw& law : std::vector<MeanLaw>{BetaLaw{1.0, 1.0}, BetaLaw{1.0, 2.0},
                                                  BetaLaw{1.0, 3.0}, BetaLaw{2.0, 3.0},
                                                  Uniform01{}}) {
    const Reservoir r(ReservoirSpec{law, Deterministic{}, 1.0});
    const RegularityReport rep = check_regularity(r, 100000, 1);
    CHECK(rep.passed);
    CHECK(rep.max_bound_violation <= 1e-9);
    CHECK(rep.max_duality_error <= 1e-12);
  }
  const Reservoir table(ReservoirSpec{TabulatedMeans{{0.5}}, Deterministic{}, 1.0});
  CHECK(error_of([&] { check_regularity(table, 10, 1); }) == ErrorCode::kUnsupportedSpec);
}

}  // namespace
}  // namespace siri
