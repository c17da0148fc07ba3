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


#include "siri/reservoir.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/erf.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "siri/status.hpp"

namespace siri {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr double kInvSqrt2Pi = 0.39894228040143267794;

// Below this acceptance probability rejection sampling switches to the
// inverse-CDF construction of the same truncated law.
constexpr double kMinRejectionAcceptance = 0.02;

double normal_pdf(double x) { return kInvSqrt2Pi * std::exp(-0.5 * x * x); }
double normal_cdf(double x) { return 0.5 * std::erfc(-x * kInvSqrt2); }

double normal_quantile(double p) {
  return -std::sqrt(2.0) * boost::math::erfc_inv(2.0 * p);
}

bool is_finite(double x) { return std::isfinite(x); }

}  // namespace

Reservoir::Reservoir(ReservoirSpec spec) : spec_(std::move(spec)) {
  const double c = spec_.reward_bound;
  require(is_finite(c) && c > 0.0, "reward bound C must be positive");

  std::visit(Overloaded{
                 [&](const BetaLaw& law) {
                   require(is_finite(law.shape_x) && law.shape_x > 0.0 &&
                               is_finite(law.shape_y) && law.shape_y > 0.0,
                           "beta law shapes must be positive");
                   support_low_ = 0.0;
                   support_high_ = 1.0;
                 },
                 [&](const Uniform01&) {
                   support_low_ = 0.0;
                   support_high_ = 1.0;
                 },
                 [&](const TabulatedMeans& law) {
                   require(!law.means.empty(), "tabulated means must be non-empty");
                   for (double m : law.means) {
                     require(is_finite(m), "tabulated means must be finite");
                   }
                   sorted_means_ = law.means;
                   std::sort(sorted_means_.begin(), sorted_means_.end());
                   support_low_ = sorted_means_.front();
                   support_high_ = sorted_means_.back();
                 }},
             spec_.mean_law);

  std::visit(Overloaded{
                 [&](const TruncatedGaussian& noise) {
                   require(is_finite(noise.sd) && noise.sd > 0.0,
                           "truncated gaussian sd must be positive");
                   require(is_finite(noise.low) && is_finite(noise.high) &&
                               noise.low < noise.high,
                           "truncation interval must satisfy low < high");
                   require(noise.low >= -c && noise.high <= c,
                           "truncation interval must lie inside [-C, C]");
                 },
                 [&](const BernoulliReward&) {
                   require(support_low_ >= 0.0 && support_high_ <= 1.0,
                           "Bernoulli rewards need arm means in [0, 1]");
                   require(c >= 1.0, "Bernoulli rewards need C >= 1");
                 },
                 [&](const Deterministic&) {
                   require(support_low_ >= -c && support_high_ <= c,
                           "deterministic rewards need arm means in [-C, C]");
                 }},
             spec_.noise);

  regret_reference_ = effective_mean(support_high_);
}

double Reservoir::effective_mean(double true_mean) const {
  const auto* noise = std::get_if<TruncatedGaussian>(&spec_.noise);
  if (noise == nullptr) return true_mean;

  const double alpha = (noise->low - true_mean) / noise->sd;
  const double beta = (noise->high - true_mean) / noise->sd;
  const double cdf_lo = normal_cdf(alpha);
  const double cdf_hi = normal_cdf(beta);
  const double mass = cdf_hi - cdf_lo;
  const double pdf_diff = normal_pdf(alpha) - normal_pdf(beta);

  if (noise->mode == TruncationMode::kClip) {
    return noise->low * cdf_lo + noise->high * (1.0 - cdf_hi) + true_mean * mass +
           noise->sd * pdf_diff;
  }
  if (mass <= 1e-300) {
    return std::clamp(true_mean, noise->low, noise->high);
  }
  return std::clamp(true_mean + noise->sd * pdf_diff / mass, noise->low, noise->high);
}

ArmHandle Reservoir::make_arm(double true_mean) const {
  ArmHandle arm;
  arm.true_mean = true_mean;
  arm.effective_mean = effective_mean(true_mean);
  if (const auto* noise = std::get_if<TruncatedGaussian>(&spec_.noise)) {
    arm.accept_prob = normal_cdf((noise->high - true_mean) / noise->sd) -
                      normal_cdf((noise->low - true_mean) / noise->sd);
  }
  return arm;
}

ArmHandle Reservoir::draw_arm(Stream& stream, std::uint64_t ordinal) const {
  const double mean = std::visit(
      Overloaded{
          [&](const BetaLaw& law) -> double {
            if (law.shape_x == 1.0) {
              return 1.0 - std::pow(stream.uniform(), 1.0 / law.shape_y);
            }
            if (law.shape_y == 1.0) {
              return std::pow(stream.uniform(), 1.0 / law.shape_x);
            }
            const double gx = stream.gamma(law.shape_x);
            const double gy = stream.gamma(law.shape_y);
            return gx / (gx + gy);
          },
          [&](const Uniform01&) -> double { return stream.uniform(); },
          [&](const TabulatedMeans& law) -> double {
            return law.means[ordinal % law.means.size()];
          }},
      spec_.mean_law);
  return make_arm(mean);
}

double Reservoir::sample_reward(const ArmHandle& arm, Stream& stream) const {
  return std::visit(
      Overloaded{
          [&](const TruncatedGaussian& noise) -> double {
            if (noise.mode == TruncationMode::kClip) {
              return std::clamp(arm.true_mean + noise.sd * stream.normal(), noise.low,
                                noise.high);
            }
            if (arm.accept_prob >= kMinRejectionAcceptance) {
              for (;;) {
                const double x = arm.true_mean + noise.sd * stream.normal();
                if (x >= noise.low && x <= noise.high) return x;
              }
            }
            const double lo = normal_cdf((noise.low - arm.true_mean) / noise.sd);
            const double p = lo + stream.uniform_open() * arm.accept_prob;
            const double x = arm.true_mean + noise.sd * normal_quantile(p);
            return std::clamp(x, noise.low, noise.high);
          },
          [&](const BernoulliReward&) -> double {
            return stream.bernoulli(arm.true_mean) ? 1.0 : 0.0;
          },
          [&](const Deterministic&) -> double { return arm.true_mean; }},
      spec_.noise);
}

double Reservoir::tail_probability(double eps) const {
  require(!std::isnan(eps) && eps >= 0.0, "tail_probability needs eps >= 0");
  if (eps == 0.0) return 0.0;
  return std::visit(
      Overloaded{
          [&](const BetaLaw& law) -> double {
            if (eps >= 1.0) return 1.0;
            if (law.shape_x == 1.0) return std::pow(eps, law.shape_y);
            if (law.shape_y == 1.0) return -std::expm1(law.shape_x * std::log1p(-eps));
            // 1 - mu ~ Beta(y, x)
            return boost::math::ibeta(law.shape_y, law.shape_x, eps);
          },
          [&](const Uniform01&) -> double { return std::min(eps, 1.0); },
          [&](const TabulatedMeans&) -> double {
            const double threshold = support_high_ - eps;
            const auto above = std::upper_bound(sorted_means_.begin(),
                                                sorted_means_.end(), threshold);
            return static_cast<double>(sorted_means_.end() - above) /
                   static_cast<double>(sorted_means_.size());
          }},
      spec_.mean_law);
}

double Reservoir::quantile_g(double u) const {
  require(!std::isnan(u) && u >= 0.0 && u <= 1.0, "quantile_g needs u in [0, 1]");
  if (u == 0.0) return 0.0;
  return std::visit(
      Overloaded{
          [&](const BetaLaw& law) -> double {
            if (law.shape_x == 1.0) return std::pow(u, 1.0 / law.shape_y);
            if (law.shape_y == 1.0) {
              return -std::expm1(std::log1p(-u) / law.shape_x);
            }
            return boost::math::ibeta_inv(law.shape_y, law.shape_x, u);
          },
          [&](const Uniform01&) -> double { return u; },
          [&](const TabulatedMeans&) -> double {
            // F^{-1}(p) = inf{x : F(x) >= p} over the empirical law.
            const double p = 1.0 - u;
            const auto m = static_cast<double>(sorted_means_.size());
            auto idx = static_cast<std::size_t>(std::ceil(p * m));
            idx = idx == 0 ? 0 : idx - 1;
            idx = std::min(idx, sorted_means_.size() - 1);
            return support_high_ - sorted_means_[idx];
          }},
      spec_.mean_law);
}

bool Reservoir::has_closed_form() const noexcept {
  return !std::holds_alternative<TabulatedMeans>(spec_.mean_law);
}

RegularityConstants Reservoir::regularity() const {
  RegularityConstants rc;
  rc.mu_star = support_high_;
  rc.b_tilde = 0.5;
  if (std::holds_alternative<Uniform01>(spec_.mean_law)) {
    rc.beta = 1.0;
    return rc;
  }
  const auto* law = std::get_if<BetaLaw>(&spec_.mean_law);
  if (law == nullptr) {
    fail(ErrorCode::kUnsupportedSpec, "regularity constants need a closed-form mean law");
  }
  rc.beta = law->shape_y;
  if (law->shape_x == 1.0) return rc;
  // eps^{-y} I_eps(y, x) is an average of (1 - s)^{x - 1} over s in (0, eps),
  // hence monotone in eps: the extremes sit at eps -> 0 and eps = B.
  const double at_zero = std::exp(std::lgamma(law->shape_x + law->shape_y) -
                                  std::lgamma(law->shape_x) -
                                  std::lgamma(law->shape_y + 1.0));
  const double at_b = tail_probability(rc.b_tilde) / std::pow(rc.b_tilde, rc.beta);
  rc.e_lo = std::min(at_zero, at_b);
  rc.e_hi = std::max(at_zero, at_b);
  return rc;
}

}  // namespace siri
