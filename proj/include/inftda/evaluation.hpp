// Copyright 2026 The InfTDA Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef INFTDA_EVALUATION_HPP_
#define INFTDA_EVALUATION_HPP_

#include <chrono>
#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "inftda/data.hpp"
#include "inftda/error.hpp"
#include "inftda/topdown.hpp"

namespace inftda {

namespace detail {

// Maximum |a - b| over the union of supports of two sorted count maps;
// a prefix absent from one side counts as 0 there.
inline long long max_abs_error_maps(const CountMap& truth,
                                    const CountMap& dp) {
  long long worst = 0;
  auto t = truth.begin();
  auto p = dp.begin();
  while (t != truth.end() || p != dp.end()) {
    long long diff;
    if (p == dp.end() || (t != truth.end() && t->first < p->first)) {
      diff = t->second;
      ++t;
    } else if (t == truth.end() || p->first < t->first) {
      diff = p->second;
      ++p;
    } else {
      diff = t->second - p->second;
      ++t;
      ++p;
    }
    worst = std::max(worst, std::llabs(diff));
  }
  return worst;
}

}  // namespace detail

// Empirical maximum absolute error of the level-k hierarchical queries:
// max over all length-k prefixes of |q(D) - q(D~)|.
inline long long max_abs_error(const ContingencyTable& truth,
                               const ContingencyTable& dp, std::size_t k) {
  if (!(truth.schema() == dp.schema())) {
    throw InvalidArgument("tables have different schemas");
  }
  return detail::max_abs_error_maps(prefix_counts(truth, k),
                                    prefix_counts(dp, k));
}

// The finite-sample utility bound for level k:
//   sum_{l=1..k} sqrt((8d/rho) * ln(k * prod_{i<=l} |X_i| / beta)),
// natural log, each term clamped at 0 when its log argument drops below 1
// (the Gaussian tail bound only applies to thresholds t >= 0).
inline double utility_bound(std::size_t k, std::size_t d, const Rational& rho,
                            double beta,
                            std::span<const std::size_t> domain_sizes) {
  if (k < 1 || k > d) {
    throw InvalidArgument("bound level k must be in [1, d]");
  }
  if (domain_sizes.size() < d) {
    throw InvalidArgument("need a domain size per attribute");
  }
  if (!(beta > 0.0 && beta < 1.0)) {
    throw InvalidArgument("beta must lie in (0, 1)");
  }
  if (rho <= 0) {
    throw InvalidArgument("rho must be positive");
  }
  const double noise_factor = 8.0 * static_cast<double>(d) /
                              rational_to_double(rho);
  double log_product = 0.0;
  double bound = 0.0;
  for (std::size_t l = 1; l <= k; ++l) {
    if (domain_sizes[l - 1] < 1) {
      throw InvalidArgument("domain sizes must be positive");
    }
    log_product += std::log(static_cast<double>(domain_sizes[l - 1]));
    const double log_arg =
        std::log(static_cast<double>(k)) + log_product - std::log(beta);
    if (log_arg > 0.0) {
      bound += std::sqrt(noise_factor * log_arg);
    }
  }
  return bound;
}

// Per-level summary of one private run against the ground truth.
struct LevelReport {
  std::uint32_t level = 0;
  long long max_abs_error = 0;
  double bound = 0.0;  // 0 at level 0 where n is exact
  long long nodes_true = 0;
  long long nodes_dp = 0;
};

struct ErrorReport {
  std::vector<LevelReport> per_level;  // levels 0..d
  Rational rho;
  double beta = 0.0;
  std::uint64_t seed = 0;
  double runtime_ms = 0.0;
};

inline ErrorReport make_error_report(const ContingencyTable& truth,
                                     const PrivateTree& tree, double beta,
                                     std::uint64_t seed, double runtime_ms) {
  const std::size_t d = truth.schema().dimension();
  const std::vector<std::size_t> sizes = truth.schema().domain_sizes();
  ErrorReport report;
  report.rho = tree.params.rho;
  report.beta = beta;
  report.seed = seed;
  report.runtime_ms = runtime_ms;
  for (std::size_t k = 0; k <= d; ++k) {
    const CountMap truth_level = prefix_counts(truth, k);
    LevelReport level;
    level.level = static_cast<std::uint32_t>(k);
    level.max_abs_error =
        detail::max_abs_error_maps(truth_level, tree.levels[k]);
    level.bound =
        k == 0 ? 0.0 : utility_bound(k, d, tree.params.rho, beta, sizes);
    level.nodes_true = static_cast<long long>(truth_level.size());
    level.nodes_dp = static_cast<long long>(tree.levels[k].size());
    report.per_level.push_back(level);
  }
  return report;
}

// The naive mechanism from which InfTDA departs: one-shot discrete Gaussian
// noise on every cell of the dense contingency table, sigma^2 = 1/rho
// (l2 sensitivity sqrt(2) under substitution). No consistency, no
// non-negativity, no projection; cells may come out negative.
inline CountMap baseline_noisy_table(const ContingencyTable& table,
                                     const Rational& rho, const Key256& seed,
                                     bool zero_noise = false) {
  static constexpr std::uint64_t kMaxUniverse = 1000000;
  const Schema& schema = table.schema();
  const std::uint64_t universe = schema.universe_size_capped(kMaxUniverse);
  if (universe == 0) {
    throw InvalidArgument("universe too large for the dense baseline");
  }
  if (rho <= 0) {
    throw InvalidArgument("rho must be positive");
  }
  const NoiseScale scale{Rational(1) / rho};
  RngStream rng(derive_key(seed, "baseline"));

  CountMap noisy;
  const std::size_t d = schema.dimension();
  Index cell(d, 0);
  for (std::uint64_t step = 0; step < universe; ++step) {
    long long value = table.count(cell);
    if (!zero_noise) {
      value += sample_discrete_gaussian(scale, rng);
    }
    noisy.emplace_hint(noisy.end(), cell, value);
    // Odometer increment in lexicographic order.
    for (std::size_t i = d; i-- > 0;) {
      if (++cell[i] < schema.domain_size(i)) {
        break;
      }
      cell[i] = 0;
    }
  }
  return noisy;
}

struct BoundExperimentResult {
  std::size_t trials = 0;
  std::vector<double> bounds;            // per level 0..d, 0 at level 0
  std::vector<double> pass_rate;         // per level 0..d
  std::vector<long long> worst_error;    // per level 0..d, max over trials
  std::vector<long long> nodes_true;     // per level 0..d
  std::vector<long long> max_nodes_dp;   // per level 0..d, max over trials
  double joint_pass_rate = 0.0;          // all levels within bound at once
};

// Repeats InfTDA with per-trial derived seeds and reports, per level, how
// often the measured maximum error stays within the theoretical bound, plus
// the rate at which every level passes simultaneously. The guarantee covers
// each level individually with failure probability beta; the joint rate is
// reported for context, not asserted.
inline BoundExperimentResult bound_experiment(const ContingencyTable& truth,
                                              const Rational& rho, double beta,
                                              std::size_t trials,
                                              const Key256& seed,
                                              const RunOptions& options = {}) {
  if (trials < 1) {
    throw InvalidArgument("need at least one trial");
  }
  const std::size_t d = truth.schema().dimension();
  const PrivacyParams params(rho, static_cast<std::uint32_t>(d));
  const std::vector<std::size_t> sizes = truth.schema().domain_sizes();

  std::vector<CountMap> truth_levels;
  truth_levels.reserve(d + 1);
  for (std::size_t k = 0; k <= d; ++k) {
    truth_levels.push_back(prefix_counts(truth, k));
  }

  BoundExperimentResult result;
  result.trials = trials;
  result.bounds.assign(d + 1, 0.0);
  for (std::size_t k = 1; k <= d; ++k) {
    result.bounds[k] = utility_bound(k, d, rho, beta, sizes);
  }
  result.nodes_true.assign(d + 1, 0);
  for (std::size_t k = 0; k <= d; ++k) {
    result.nodes_true[k] = static_cast<long long>(truth_levels[k].size());
  }

  std::vector<std::vector<long long>> errors(trials);
  std::vector<std::vector<long long>> nodes(trials);
  detail::for_each_chunk(
      trials, options.threads,
      [&](std::size_t begin, std::size_t end, std::size_t) {
        RunOptions trial_options;
        trial_options.zero_noise = options.zero_noise;
        for (std::size_t trial = begin; trial < end; ++trial) {
          const Key256 trial_seed = derive_key(seed, "trial", {trial});
          const PrivateTree tree =
              run_topdown(truth, params, trial_seed, trial_options);
          errors[trial].resize(d + 1);
          nodes[trial].resize(d + 1);
          for (std::size_t k = 0; k <= d; ++k) {
            errors[trial][k] =
                detail::max_abs_error_maps(truth_levels[k], tree.levels[k]);
            nodes[trial][k] = static_cast<long long>(tree.levels[k].size());
          }
        }
      });

  result.pass_rate.assign(d + 1, 0.0);
  result.worst_error.assign(d + 1, 0);
  result.max_nodes_dp.assign(d + 1, 0);
  std::size_t joint_passes = 0;
  std::vector<std::size_t> passes(d + 1, 0);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    bool all_pass = true;
    for (std::size_t k = 0; k <= d; ++k) {
      const long long err = errors[trial][k];
      result.worst_error[k] = std::max(result.worst_error[k], err);
      result.max_nodes_dp[k] = std::max(result.max_nodes_dp[k],
                                        nodes[trial][k]);
      const bool pass =
          k == 0 ? err == 0
                 : static_cast<double>(err) <= result.bounds[k];
      if (pass) {
        ++passes[k];
      } else {
        all_pass = false;
      }
    }
    if (all_pass) {
      ++joint_passes;
    }
  }
  for (std::size_t k = 0; k <= d; ++k) {
    result.pass_rate[k] =
        static_cast<double>(passes[k]) / static_cast<double>(trials);
  }
  result.joint_pass_rate =
      static_cast<double>(joint_passes) / static_cast<double>(trials);
  return result;
}

inline BoundExperimentResult bound_experiment(const Dataset& dataset,
                                              const Rational& rho, double beta,
                                              std::size_t trials,
                                              const Key256& seed,
                                              const RunOptions& options = {}) {
  return bound_experiment(contingency(dataset), rho, beta, trials, seed,
                          options);
}

}  // namespace inftda

#endif  // INFTDA_EVALUATION_HPP_
