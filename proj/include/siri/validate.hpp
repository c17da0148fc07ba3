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


// Empirical checks of the probabilistic building blocks behind the rates:
// dyadic arm-count concentration, confidence index coverage, concentration
// of the tail-index estimator, and tail regularity of the reservoirs.

#ifndef SIRI_VALIDATE_HPP_
#define SIRI_VALIDATE_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "siri/random.hpp"
#include "siri/reservoir.hpp"
#include "siri/siri.hpp"

namespace siri {

// Arms binned by tail level q = P(mu' > mu):
//   counts[u]  q in (2^{-u-1}, 2^{-u}],  u = 0..t_bar
//   n_star     q <= 2^{-t_bar-1}            (I* minus I_{t_bar})
//   n_below    q > 1                        (atoms below the support; 0 for
//                                            continuous laws)
// The classes partition the draws; I* in the proofs is counts[t_bar] + n_star.
struct IntervalCensus {
  int t_bar = 0;
  std::vector<std::uint64_t> counts;
  std::uint64_t n_star = 0;
  std::uint64_t n_below = 0;

  std::uint64_t total() const;
  std::uint64_t i_star() const;
};

// Throws Error(kUnsupportedSpec) for reservoirs without a closed-form G.
IntervalCensus census_arms(const Reservoir& reservoir, std::uint64_t arms, Stream& stream);

// |N_u - 2^{t-u-1}| tolerance and the bound on the I* count.
double xi1_count_tolerance(int t_bar, int u, double delta);
double xi1_star_bound(double delta);
bool xi1_holds(const IntervalCensus& census, double delta);

struct Xi1Report {
  std::uint64_t trials = 0;
  std::uint64_t passes = 0;
  double pass_rate = 0.0;
  double bound = 0.0;          // 1 - (1 + e / (e - 1)) delta
  double std_error = 0.0;      // binomial, at the bound
  bool applicable = true;      // false once the bound drops to <= 0
  bool passed = false;         // pass_rate >= bound - 3 se
};

Xi1Report check_xi1(const Reservoir& reservoir, std::uint64_t arms, double delta,
                    std::uint64_t trials, std::uint64_t seed);

struct CoverageRow {
  int v = 0;
  std::uint64_t samples = 0;   // 2^v
  std::uint64_t trials = 0;
  std::uint64_t violations = 0;
  double rate = 0.0;
  double radius = 0.0;
  double budget = 0.0;         // 2^v 2^{-2 t_bar / b} delta
  double threshold = 0.0;      // budget + 3 se
  bool skipped = false;        // v > 2 t_bar / b
  bool passed = true;
};

struct CoverageReport {
  std::vector<CoverageRow> rows;
  bool passed = true;
};

// Deviation radius 2 sqrt(C 2^{-v} L) + 2 C 2^{-v} L, L = ln(2^{2t/b - v} / delta).
double coverage_radius(double C, double delta, const SiriSchedule& sched, int v);

// Samples are i.i.d. rewards of an arm with the given mean under the
// reservoir's noise model. max_v < 0 checks every level.
CoverageReport check_index_coverage(const Reservoir& reservoir, double arm_mean,
                                    double C, double delta, const SiriSchedule& sched,
                                    std::uint64_t trials, std::uint64_t seed,
                                    int max_v = -1);

struct BetaConcentrationReport {
  std::vector<std::uint64_t> Ns;
  std::vector<double> median_abs_error;
  std::vector<double> median_beta_hat;
  std::uint64_t trials = 0;
  int inversions = 0;
  bool low_power = false;      // trials < 30
  bool passed = false;         // at most one inversion
};

BetaConcentrationReport check_beta_concentration(const Reservoir& reservoir,
                                                 double beta_true,
                                                 const std::vector<std::uint64_t>& Ns,
                                                 double epsilon, std::uint64_t trials,
                                                 std::uint64_t seed);

struct RegularityReport {
  RegularityConstants constants;
  double max_bound_violation = 0.0;  // max over the grid of relative excess
  double max_duality_error = 0.0;    // |tail(G(u)) - u|
  double max_empirical_z = 0.0;      // |empirical - closed-form| / se
  std::uint64_t draws = 0;
  bool passed = false;
};

RegularityReport check_regularity(const Reservoir& reservoir, std::uint64_t draws,
                                  std::uint64_t seed);

}  // namespace siri

#endif  // SIRI_VALIDATE_HPP_
