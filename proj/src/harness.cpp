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


#include "siri/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

#include "siri/status.hpp"

namespace siri {
namespace {

struct RunResult {
  Outcome outcome;
  double beta = 0.0;
};

RunResult dispatch(const AlgorithmConfig& cfg, const Reservoir& reservoir,
                   std::uint64_t n, Stream stream) {
  RunResult result;
  result.beta = cfg.siri.beta;
  switch (cfg.kind) {
    case AlgorithmKind::kSiri:
    case AlgorithmKind::kBernsteinSiri: {
      Session session(reservoir, n, stream);
      const IndexKind kind = cfg.kind == AlgorithmKind::kSiri ? IndexKind::kHoeffding
                                                              : IndexKind::kBernstein;
      result.outcome = session.outcome(run_siri(session, cfg.siri, kind));
      return result;
    }
    case AlgorithmKind::kBetaBarSiri: {
      BetaBarConfig bb;
      bb.C = cfg.siri.C;
      bb.delta = cfg.siri.delta;
      bb.A = cfg.siri.A;
      bb.c_prime = cfg.c_prime;
      bb.beta_floor = cfg.beta_floor;
      bb.floor_rule = cfg.floor_rule;
      const BetaBarRun run = run_betabar_siri(reservoir, n, bb, stream);
      result.outcome = run.outcome;
      result.beta = run.estimate.beta_bar;
      return result;
    }
    case AlgorithmKind::kUcbF: {
      UcbFConfig uc;
      uc.beta = cfg.siri.beta;
      uc.C = cfg.siri.C;
      uc.delta = cfg.siri.delta;
      uc.zeta = cfg.ucbf_zeta;
      uc.c = cfg.ucbf_c;
      uc.num_arms = cfg.num_arms;
      uc.recommendation = cfg.ucbf_recommendation;
      Session session(reservoir, n, stream);
      result.outcome = session.outcome(run_ucbf(session, uc));
      return result;
    }
    case AlgorithmKind::kLilUcb: {
      LilUcbConfig lc = cfg.lilucb;
      lc.delta = cfg.siri.delta;
      lc.num_arms = cfg.num_arms;
      SiriSchedule sched;
      if (!lc.num_arms) sched = derive_schedule(cfg.siri, n);
      Session session(reservoir, n, stream);
      result.outcome = session.outcome(run_lilucb(session, lc, sched));
      return result;
    }
    case AlgorithmKind::kUniform: {
      const std::uint64_t arms =
          cfg.num_arms ? *cfg.num_arms : derive_schedule(cfg.siri, n).arms;
      Session session(reservoir, n, stream);
      result.outcome = session.outcome(run_uniform(session, arms));
      return result;
    }
  }
  fail(ErrorCode::kInternal, "unknown algorithm kind");
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

const char* algorithm_name(AlgorithmKind kind) noexcept {
  switch (kind) {
    case AlgorithmKind::kSiri: return "siri";
    case AlgorithmKind::kBernsteinSiri: return "bsiri";
    case AlgorithmKind::kBetaBarSiri: return "betabar-siri";
    case AlgorithmKind::kUcbF: return "ucbf";
    case AlgorithmKind::kLilUcb: return "lilucb";
    case AlgorithmKind::kUniform: return "uniform";
  }
  return "unknown";
}

AlgorithmKind parse_algorithm(const std::string& name) {
  for (AlgorithmKind kind :
       {AlgorithmKind::kSiri, AlgorithmKind::kBernsteinSiri, AlgorithmKind::kBetaBarSiri,
        AlgorithmKind::kUcbF, AlgorithmKind::kLilUcb, AlgorithmKind::kUniform}) {
    if (name == algorithm_name(kind)) return kind;
  }
  fail(ErrorCode::kInvalidArgument, "unknown algorithm '" + name + "'");
}

Outcome run_algorithm(const AlgorithmConfig& cfg, const Reservoir& reservoir,
                      std::uint64_t n, Stream stream) {
  return dispatch(cfg, reservoir, n, stream).outcome;
}

void validate(const ExperimentConfig& cfg) {
  require(!cfg.algorithms.empty(), "experiment needs at least one algorithm");
  require(!cfg.budgets.empty(), "experiment needs at least one budget");
  require(cfg.replications >= 1, "replications must be >= 1");
  require(cfg.replications <= std::numeric_limits<std::uint32_t>::max(),
          "replications must be < 2^32");
  for (std::size_t i = 0; i < cfg.budgets.size(); ++i) {
    require(cfg.budgets[i] >= 1, "budgets must be positive");
    require(cfg.budgets[i] <= std::numeric_limits<std::uint32_t>::max(),
            "budgets must be < 2^32");
    require(i == 0 || cfg.budgets[i] > cfg.budgets[i - 1],
            "budgets must be strictly increasing");
  }
  for (const AlgorithmConfig& a : cfg.algorithms) validate(a.siri);
  Reservoir check(cfg.reservoir);
  (void)check;
}

StreamId replication_stream_id(std::uint64_t n, std::uint64_t rep) {
  require(n <= std::numeric_limits<std::uint32_t>::max() &&
              rep <= std::numeric_limits<std::uint32_t>::max(),
          "stream coordinates must be < 2^32");
  return StreamId{static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(rep)};
}

std::vector<ResultRow> run_experiment(const ExperimentConfig& cfg) {
  validate(cfg);
  const Reservoir reservoir(cfg.reservoir);
  const std::size_t per_algo = cfg.budgets.size() * cfg.replications;
  const std::size_t total = cfg.algorithms.size() * per_algo;
  std::vector<ResultRow> rows(total);

  auto run_task = [&](std::size_t task) {
    const std::size_t a = task / per_algo;
    const std::size_t rest = task % per_algo;
    const std::uint64_t n = cfg.budgets[rest / cfg.replications];
    const std::uint64_t rep = rest % cfg.replications;
    const AlgorithmConfig& algo = cfg.algorithms[a];

    ResultRow& row = rows[task];
    row.algo = algorithm_name(algo.kind);
    row.beta = algo.siri.beta;
    row.n = n;
    row.rep = rep;
    row.seed = cfg.master_seed;
    const auto start = std::chrono::steady_clock::now();
    try {
      const RunResult r = dispatch(algo, reservoir, n,
                                   Stream(cfg.master_seed, replication_stream_id(n, rep)));
      row.beta = r.beta;
      row.regret = r.outcome.regret;
      row.chosen_mean = r.outcome.chosen_mean;
      row.chosen_pulls = r.outcome.chosen_pulls;
      row.arms_drawn = r.outcome.arms_drawn;
    } catch (const Error& e) {
      row.regret = std::numeric_limits<double>::quiet_NaN();
      row.chosen_mean = std::numeric_limits<double>::quiet_NaN();
      row.error = error_code_name(e.code());
    } catch (const std::exception&) {
      row.regret = std::numeric_limits<double>::quiet_NaN();
      row.chosen_mean = std::numeric_limits<double>::quiet_NaN();
      row.error = error_code_name(ErrorCode::kInternal);
    }
    if (cfg.record_timing) {
      row.wall_ns = static_cast<std::uint64_t>(
          std::chrono::duration_cast<std::chrono::nanoseconds>(
              std::chrono::steady_clock::now() - start)
              .count());
    }
  };

  unsigned workers = cfg.threads == 0 ? std::thread::hardware_concurrency() : cfg.threads;
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(total)));
  if (workers == 1) {
    for (std::size_t task = 0; task < total; ++task) run_task(task);
    return rows;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t task = next++; task < total; task = next++) run_task(task);
    });
  }
  for (std::thread& t : pool) t.join();
  return rows;
}

RateFit fit_power_law(const std::vector<std::pair<double, double>>& n_and_mean) {
  require(n_and_mean.size() >= 3, "rate fit needs at least 3 budgets");
  RateFit fit;
  for (const auto& [n, mean] : n_and_mean) {
    require(n > 0.0 && mean > 0.0, "rate fit needs positive budgets and mean regret");
    fit.points.emplace_back(std::log(n), std::log(mean));
  }
  const double m = static_cast<double>(fit.points.size());
  double sx = 0.0, sy = 0.0;
  for (const auto& [x, y] : fit.points) {
    sx += x;
    sy += y;
  }
  const double mx = sx / m, my = sy / m;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (const auto& [x, y] : fit.points) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
    syy += (y - my) * (y - my);
  }
  require(sxx > 0.0, "rate fit needs distinct budgets");
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double sse = 0.0;
  for (const auto& [x, y] : fit.points) {
    const double r = y - (fit.intercept + fit.slope * x);
    sse += r * r;
  }
  fit.r_squared = syy > 0.0 ? std::clamp(1.0 - sse / syy, 0.0, 1.0) : 1.0;
  return fit;
}

RateFit fit_rate_slope(const std::vector<ResultRow>& rows, const std::string& algo) {
  std::map<std::uint64_t, std::pair<double, std::uint64_t>> by_n;
  for (const ResultRow& row : rows) {
    if (!row.ok() || (!algo.empty() && row.algo != algo)) continue;
    auto& acc = by_n[row.n];
    acc.first += row.regret;
    acc.second += 1;
  }
  std::vector<std::pair<double, double>> points;
  for (const auto& [n, acc] : by_n) {
    points.emplace_back(static_cast<double>(n), acc.first / static_cast<double>(acc.second));
  }
  return fit_power_law(points);
}

double quantile(std::vector<double> values, double q) {
  require(!values.empty(), "quantile of empty data");
  require(q >= 0.0 && q <= 1.0, "quantile level must lie in [0, 1]");
  std::sort(values.begin(), values.end());
  const double pos = q * static_cast<double>(values.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, values.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return values[lo] + frac * (values[hi] - values[lo]);
}

std::vector<SummaryStats> summarize(const std::vector<ResultRow>& rows) {
  struct Group {
    SummaryStats stats;
    std::vector<double> regrets;
    double arms = 0.0;
  };
  std::vector<Group> groups;
  std::map<std::pair<std::string, std::uint64_t>, std::size_t> lookup;
  for (const ResultRow& row : rows) {
    const auto key = std::make_pair(row.algo, row.n);
    auto it = lookup.find(key);
    if (it == lookup.end()) {
      it = lookup.emplace(key, groups.size()).first;
      Group g;
      g.stats.algo = row.algo;
      g.stats.beta = row.beta;
      g.stats.n = row.n;
      groups.push_back(std::move(g));
    }
    Group& g = groups[it->second];
    if (!row.ok()) {
      ++g.stats.failures;
      continue;
    }
    g.regrets.push_back(row.regret);
    g.arms += static_cast<double>(row.arms_drawn);
  }
  std::vector<SummaryStats> out;
  for (Group& g : groups) {
    SummaryStats s = g.stats;
    s.count = g.regrets.size();
    if (s.count > 0) {
      const double m = static_cast<double>(s.count);
      double sum = 0.0;
      for (double r : g.regrets) sum += r;
      s.mean = sum / m;
      double ss = 0.0;
      for (double r : g.regrets) ss += (r - s.mean) * (r - s.mean);
      s.std_error = s.count > 1 ? std::sqrt(ss / (m - 1.0) / m) : 0.0;
      s.median = quantile(g.regrets, 0.5);
      s.q10 = quantile(g.regrets, 0.1);
      s.q90 = quantile(g.regrets, 0.9);
      s.mean_arms_drawn = g.arms / m;
    }
    out.push_back(s);
  }
  return out;
}

void write_csv(std::ostream& out, const std::vector<ResultRow>& rows) {
  out << kCsvSchemaLine << '\n';
  out << "algo,beta,n,rep,seed,regret,chosen_mean,chosen_pulls,arms_drawn,wall_ns,error\n";
  for (const ResultRow& r : rows) {
    out << r.algo << ',' << format_double(r.beta) << ',' << r.n << ',' << r.rep << ','
        << r.seed << ',' << format_double(r.regret) << ',' << format_double(r.chosen_mean)
        << ',' << r.chosen_pulls << ',' << r.arms_drawn << ',' << r.wall_ns << ','
        << r.error << '\n';
  }
}

std::string to_csv(const std::vector<ResultRow>& rows) {
  std::ostringstream out;
  write_csv(out, rows);
  return out.str();
}

}  // namespace siri
