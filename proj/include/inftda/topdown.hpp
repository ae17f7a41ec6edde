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

#ifndef INFTDA_TOPDOWN_HPP_
#define INFTDA_TOPDOWN_HPP_

#include <cstdint>
#include <thread>
#include <utility>
#include <vector>

#include "inftda/chebyshev_projection.hpp"
#include "inftda/data.hpp"
#include "inftda/discrete_gaussian.hpp"
#include "inftda/error.hpp"
#include "inftda/rational.hpp"
#include "inftda/rng.hpp"

namespace inftda {

// Total zCDP budget rho and the per-level noise scale derived from it.
// Each of the d levels is a data partition with l2 sensitivity sqrt(2)
// under substitution, so a per-level budget of rho/d means
// rho/d = 1/sigma^2, i.e. sigma^2 = d/rho, exact.
struct PrivacyParams {
  Rational rho;
  std::uint32_t depth;
  Rational sigma_sq_per_level;

  PrivacyParams(Rational budget, std::uint32_t d)
      : rho(std::move(budget)), depth(d), sigma_sq_per_level(0) {
    if (rho <= 0) {
      throw InvalidArgument("privacy budget rho must be positive");
    }
    if (depth == 0) {
      throw InvalidArgument("tree depth must be at least 1");
    }
    sigma_sq_per_level = Rational(depth) / rho;
  }
};

inline NoiseScale per_level_sigma(const PrivacyParams& params) {
  return NoiseScale(params.sigma_sq_per_level);
}

// The privatized non-negative hierarchical tree. levels[k] maps length-k
// prefixes to attributes; level 0 always holds {() -> n} (n is non-sensitive
// under substitution neighbors), zero-attribute nodes below the root are
// never stored, and every stored parent equals the sum of its stored
// children.
struct PrivateTree {
  Schema schema;
  std::vector<CountMap> levels;
  PrivacyParams params;
  Key256 seed;
};

struct RunOptions {
  bool zero_noise = false;  // test mode: noise vector identically zero
  unsigned threads = 1;
};

namespace detail {

// Runs fn(begin, end) over [0, n) split into contiguous chunks. Chunking is
// a pure function of (n, threads), so results concatenated in chunk order do
// not depend on the worker count.
template <typename Fn>
void for_each_chunk(std::size_t n, unsigned threads, Fn&& fn) {
  if (threads <= 1 || n < 2) {
    fn(0, n, 0);
    return;
  }
  const std::size_t chunk_count = std::min<std::size_t>(threads, n);
  const std::size_t chunk_size = (n + chunk_count - 1) / chunk_count;
  std::vector<std::thread> workers;
  workers.reserve(chunk_count);
  for (std::size_t chunk = 0; chunk < chunk_count; ++chunk) {
    const std::size_t begin = chunk * chunk_size;
    const std::size_t end = std::min(n, begin + chunk_size);
    if (begin >= end) {
      break;
    }
    workers.emplace_back([&fn, begin, end, chunk] { fn(begin, end, chunk); });
  }
  for (std::thread& worker : workers) {
    worker.join();
  }
}

}  // namespace detail

// Builds the private tree level by level. For every retained parent at level
// k-1 with attribute c, the true child vector is formed densely over the
// whole attribute domain (privatizing only observed children would leak
// support), discrete Gaussian noise with sigma^2 = d/rho is added to each
// entry, and the noisy vector is projected onto {y >= 0, sum(y) = c} under
// the Chebyshev norm. Zero children are dropped, which prunes their entire
// branch. Each node uses an RNG stream derived from (seed, level, prefix),
// so the output is a function of (input, rho, seed) alone, independent of
// traversal order and thread count.
inline PrivateTree run_topdown(const ContingencyTable& table,
                               const PrivacyParams& params, const Key256& seed,
                               const RunOptions& options = {}) {
  const Schema& schema = table.schema();
  const std::size_t d = schema.dimension();
  if (params.depth != d) {
    throw InvalidArgument("privacy params depth does not match schema");
  }

  PrivateTree tree{schema, {}, params, seed};
  tree.levels.resize(d + 1);
  tree.levels[0][Index{}] = table.total();

  const NoiseScale scale = per_level_sigma(params);
  for (std::size_t k = 1; k <= d; ++k) {
    const CountMap true_level = prefix_counts(table, k);
    const std::size_t m = schema.domain_size(k - 1);

    // Retained parents in prefix order; the root with n = 0 has nothing to
    // expand.
    std::vector<std::pair<const Index*, long long>> parents;
    parents.reserve(tree.levels[k - 1].size());
    for (const auto& [prefix, attribute] : tree.levels[k - 1]) {
      if (attribute > 0) {
        parents.emplace_back(&prefix, attribute);
      }
    }

    std::vector<std::vector<std::pair<Index, long long>>> chunk_results(
        std::min<std::size_t>(std::max(1u, options.threads), parents.size()) +
        1);
    detail::for_each_chunk(
        parents.size(), options.threads,
        [&](std::size_t begin, std::size_t end, std::size_t chunk) {
          auto& out = chunk_results[chunk];
          std::vector<long long> noisy(m);
          for (std::size_t p = begin; p < end; ++p) {
            const Index& prefix = *parents[p].first;
            const long long constraint = parents[p].second;

            // Dense true child vector; children of `prefix` occupy a
            // contiguous range of the sorted level map.
            std::fill(noisy.begin(), noisy.end(), 0LL);
            Index child(prefix);
            child.push_back(0);
            for (auto it = true_level.lower_bound(child);
                 it != true_level.end() &&
                 std::equal(prefix.begin(), prefix.end(), it->first.begin());
                 ++it) {
              noisy[it->first.back()] = it->second;
            }

            if (!options.zero_noise) {
              std::vector<std::uint64_t> parts;
              parts.reserve(prefix.size() + 1);
              parts.push_back(k);
              for (std::uint32_t value : prefix) {
                parts.push_back(value);
              }
              RngStream rng(derive_key(seed, "node", parts));
              for (std::size_t j = 0; j < m; ++j) {
                noisy[j] += sample_discrete_gaussian(scale, rng);
              }
            }

            const ProjectionSolution solution =
                chebyshev_project(noisy, constraint);
            for (std::size_t j = 0; j < m; ++j) {
              if (solution.values[j] != 0) {
                child.back() = static_cast<std::uint32_t>(j);
                out.emplace_back(child, solution.values[j]);
              }
            }
          }
        });

    CountMap& level = tree.levels[k];
    for (const auto& chunk : chunk_results) {
      for (const auto& [index, value] : chunk) {
        level.emplace_hint(level.end(), index, value);
      }
    }
  }
  return tree;
}

inline PrivateTree run_topdown(const Dataset& dataset,
                               const PrivacyParams& params, const Key256& seed,
                               const RunOptions& options = {}) {
  return run_topdown(contingency(dataset), params, seed, options);
}

// The leaf level is the private contingency table; its total equals the root
// attribute n by hierarchical consistency.
inline ContingencyTable to_table(const PrivateTree& tree) {
  if (tree.levels.size() != tree.schema.dimension() + 1) {
    throw InvalidArgument("tree is incomplete: missing levels");
  }
  return ContingencyTable::from_counts(tree.schema,
                                       tree.levels[tree.schema.dimension()]);
}

}  // namespace inftda

#endif  // INFTDA_TOPDOWN_HPP_
