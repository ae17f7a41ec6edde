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

#ifndef INFTDA_DISCRETE_GAUSSIAN_HPP_
#define INFTDA_DISCRETE_GAUSSIAN_HPP_

#include <cmath>
#include <cstdint>
#include <vector>

#include "inftda/error.hpp"
#include "inftda/rational.hpp"
#include "inftda/rng.hpp"

namespace inftda {

// Noise scale sigma^2, kept as an exact rational so every Bernoulli draw in
// the sampler works over integers. No floating-point value ever enters the
// sampling path.
struct NoiseScale {
  Rational sigma_sq;

  explicit NoiseScale(Rational s) : sigma_sq(std::move(s)) {
    if (sigma_sq <= 0) {
      throw InvalidArgument("noise scale sigma^2 must be positive");
    }
  }
};

namespace detail {

// Caps the total number of rejection-loop passes in one sample() call. The
// loops terminate with probability 1; hitting the cap signals a broken RNG
// rather than bad luck.
constexpr std::uint64_t kMaxRejectionIterations = 1000000;

struct RejectionBudget {
  std::uint64_t remaining = kMaxRejectionIterations;

  void spend() {
    if (remaining-- == 0) {
      throw Error(
          "discrete Gaussian sampler exceeded 1e6 rejection iterations; "
          "the random stream looks broken");
    }
  }
};

// Bernoulli(num/den) with 0 <= num <= den, exact.
inline bool bernoulli_fraction(RngStream& rng, const BigInt& num,
                               const BigInt& den) {
  return rng.uniform_below(den) < num;
}

// Bernoulli(exp(-num/den)) for 0 <= num <= den, exact (forward sampling of
// the alternating series; the draw count index is odd iff the event holds).
inline bool bernoulli_exp_at_most_one(RngStream& rng, const BigInt& num,
                                      const BigInt& den,
                                      RejectionBudget& budget) {
  BigInt k = 1;
  for (;;) {
    budget.spend();
    if (!bernoulli_fraction(rng, num, den * k)) {
      break;
    }
    ++k;
  }
  return (k % 2) == 1;
}

// Bernoulli(exp(-num/den)) for any num, den > 0, exact.
inline bool bernoulli_exp(RngStream& rng, const BigInt& num, const BigInt& den,
                          RejectionBudget& budget) {
  const BigInt whole = num / den;
  for (BigInt i = 0; i < whole; ++i) {
    if (!bernoulli_exp_at_most_one(rng, 1, 1, budget)) {
      return false;
    }
  }
  return bernoulli_exp_at_most_one(rng, num % den, den, budget);
}

// Discrete Laplace with scale t >= 1: Pr[Y = y] proportional to exp(-|y|/t).
inline BigInt sample_discrete_laplace(RngStream& rng, const BigInt& t,
                                      RejectionBudget& budget) {
  for (;;) {
    budget.spend();
    const BigInt u = rng.uniform_below(t);
    if (!bernoulli_exp_at_most_one(rng, u, t, budget)) {
      continue;
    }
    BigInt v = 0;
    while (bernoulli_exp_at_most_one(rng, 1, 1, budget)) {
      budget.spend();
      ++v;
    }
    const BigInt magnitude = u + t * v;
    const bool negative = rng.next_bit();
    if (negative && magnitude == 0) {
      continue;
    }
    return negative ? -magnitude : magnitude;
  }
}

}  // namespace detail

// One exact draw from the discrete Gaussian N_Z(0, sigma^2): rejection
// sampling from a discrete Laplace base with exact-rational Bernoulli
// filters, after Canonne, Kamath and Steinke.
inline long long sample_discrete_gaussian(const NoiseScale& scale,
                                          RngStream& rng) {
  const BigInt p = numerator(scale.sigma_sq);
  const BigInt q = denominator(scale.sigma_sq);
  // t = floor(sigma) + 1; floor(sqrt(p/q)) = floor(sqrt(floor(p/q))).
  const BigInt sigma_sq_floor = p / q;
  const BigInt t = boost::multiprecision::sqrt(sigma_sq_floor) + 1;

  detail::RejectionBudget budget;
  const BigInt gamma_den = 2 * p * q * t * t;
  for (;;) {
    budget.spend();
    const BigInt y = detail::sample_discrete_laplace(rng, t, budget);
    // gamma = (|y| - sigma^2/t)^2 / (2 sigma^2) = (|y| q t - p)^2 / (2 p q t^2)
    const BigInt residual = abs(y) * q * t - p;
    if (detail::bernoulli_exp(rng, residual * residual, gamma_den, budget)) {
      if (y > BigInt(INT64_MAX) || y < BigInt(INT64_MIN)) {
        throw Error("discrete Gaussian sample exceeds 64-bit range");
      }
      return y.convert_to<long long>();
    }
  }
}

// m independent draws from one stream.
inline std::vector<long long> sample_discrete_gaussian_vector(
    const NoiseScale& scale, std::size_t m, RngStream& rng) {
  if (m == 0) {
    throw InvalidArgument("sample vector length must be positive");
  }
  std::vector<long long> samples(m);
  for (std::size_t i = 0; i < m; ++i) {
    samples[i] = sample_discrete_gaussian(scale, rng);
  }
  return samples;
}

// Upper tail bound Pr[Z >= t] <= exp(-t^2 / (2 sigma^2)) for t >= 0.
inline double discrete_gaussian_tail_bound(long long t,
                                           const NoiseScale& scale) {
  if (t < 0) {
    throw InvalidArgument("tail bound requires t >= 0");
  }
  const double sigma_sq = rational_to_double(scale.sigma_sq);
  const double td = static_cast<double>(t);
  return std::exp(-(td * td) / (2.0 * sigma_sq));
}

}  // namespace inftda

#endif  // INFTDA_DISCRETE_GAUSSIAN_HPP_
