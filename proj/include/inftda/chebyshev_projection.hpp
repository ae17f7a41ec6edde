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

#ifndef INFTDA_CHEBYSHEV_PROJECTION_HPP_
#define INFTDA_CHEBYSHEV_PROJECTION_HPP_

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <span>
#include <vector>

#include "inftda/error.hpp"

namespace inftda {

// Solution of P(x, c): the non-negative integer vector y with sum(y) = c
// minimizing ||x - y||_inf, together with the attained objective.
struct ProjectionSolution {
  std::vector<long long> values;
  long long objective = 0;
};

namespace detail {

// Ceiling of the exact rational a/b for b > 0, e.g. ceil(-2/3) = 0.
inline long long ceil_div(long long a, long long b) {
  const long long quotient = a / b;
  return (a % b > 0) ? quotient + 1 : quotient;
}

// Indices of x sorted by ascending (value, index). The total order makes the
// reduction sweep, and therefore the chosen optimum, deterministic.
inline std::vector<std::size_t> ascending_order(std::span<const long long> x) {
  std::vector<std::size_t> order(x.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&x](std::size_t a, std::size_t b) { return x[a] < x[b]; });
  return order;
}

}  // namespace detail

// Lower bound on the Chebyshev objective of P(x, c):
// max(ceil(|c - sum(x)| / m), -min_i x_i) clamped at 0.
inline long long chebyshev_lower_bound(std::span<const long long> x,
                                       long long c) {
  if (x.empty()) {
    throw InvalidArgument("projection needs at least one element");
  }
  const long long m = static_cast<long long>(x.size());
  const long long sum = std::accumulate(x.begin(), x.end(), 0LL);
  const long long min_value = *std::min_element(x.begin(), x.end());
  const long long spread_term = detail::ceil_div(std::llabs(c - sum), m);
  return std::max({spread_term, -min_value, 0LL});
}

// Solves P(x, c) exactly. Starts from z_i = max(ceil((c - sum(x)) / m), -x_i),
// whose sum always covers the constraint, then removes the surplus in
// ascending (x_i, i) order: a first sweep takes from each element as much as
// possible without raising ||z||_inf past its initial value, and round-robin
// unit decrements absorb whatever remains.
inline ProjectionSolution chebyshev_project(std::span<const long long> x,
                                            long long c) {
  if (x.empty()) {
    throw InvalidArgument("projection needs at least one element");
  }
  if (c < 0) {
    throw InvalidArgument("projection constraint must be non-negative");
  }
  const long long m = static_cast<long long>(x.size());
  const long long sum = std::accumulate(x.begin(), x.end(), 0LL);
  const long long delta = c - sum;
  const long long base = detail::ceil_div(delta, m);

  std::vector<long long> z(x.size());
  long long norm = 0;
  long long surplus = -delta;
  for (std::size_t i = 0; i < x.size(); ++i) {
    z[i] = std::max(base, -x[i]);
    norm = std::max(norm, std::llabs(z[i]));
    surplus += z[i];
  }
  // sum(z) >= delta holds by construction of the initialization.

  const std::vector<std::size_t> order = detail::ascending_order(x);
  for (std::size_t i : order) {
    if (surplus == 0) {
      break;
    }
    const long long floor_i = std::max(-x[i], -norm);
    const long long cut = std::min(surplus, z[i] - floor_i);
    z[i] -= cut;
    surplus -= cut;
  }
  while (surplus > 0) {
    bool reduced = false;
    for (std::size_t i : order) {
      if (z[i] > -x[i]) {
        --z[i];
        --surplus;
        reduced = true;
        if (surplus == 0) {
          break;
        }
      }
    }
    if (!reduced) {
      // Unreachable for c >= 0: z bottoms out at sum(y) = 0 <= c.
      throw Error("chebyshev_project: reduction stalled");
    }
  }

  ProjectionSolution solution;
  solution.values.resize(x.size());
  solution.objective = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    solution.values[i] = x[i] + z[i];
    solution.objective = std::max(solution.objective, std::llabs(z[i]));
  }
  return solution;
}

// Oracle for the optimal objective, independent of the constructive solver:
// scan alpha upward from the lower bound and test feasibility via
// sum_i max(0, x_i - alpha) <= c <= sum_i max(0, x_i + alpha). Deliberately
// restricted to small instances.
inline long long chebyshev_brute_force(std::span<const long long> x,
                                       long long c) {
  if (x.empty()) {
    throw InvalidArgument("projection needs at least one element");
  }
  if (x.size() > 6 || c < 0 || c > 30) {
    throw InvalidArgument("brute force oracle limited to m <= 6, 0 <= c <= 30");
  }
  for (long long alpha = chebyshev_lower_bound(x, c);; ++alpha) {
    long long low = 0;
    long long high = 0;
    for (long long value : x) {
      low += std::max(0LL, value - alpha);
      high += std::max(0LL, value + alpha);
    }
    if (low <= c && c <= high) {
      return alpha;
    }
  }
}

}  // namespace inftda

#endif  // INFTDA_CHEBYSHEV_PROJECTION_HPP_
