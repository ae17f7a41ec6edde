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

#ifndef INFTDA_RNG_HPP_
#define INFTDA_RNG_HPP_

#include <array>
#include <cstdint>
#include <cstring>
#include <initializer_list>
#include <string_view>
#include <vector>

#include "inftda/rational.hpp"

namespace inftda {

// 256-bit key identifying one pseudo-random stream.
using Key256 = std::array<std::uint8_t, 32>;

namespace detail {

// ---------------------------------------------------------------------------
// SHA-256 (FIPS 180-4). Used only for seed expansion and stream derivation,
// so the implementation favors clarity over throughput. Checked against the
// FIPS test vectors in the unit tests.
// ---------------------------------------------------------------------------
class Sha256 {
 public:
  Sha256() { reset(); }

  void reset() {
    state_ = {0x6a09e667u, 0xbb67ae85u, 0x3c6ef372u, 0xa54ff53au,
              0x510e527fu, 0x9b05688cu, 0x1f83d9abu, 0x5be0cd19u};
    total_bytes_ = 0;
    buffer_len_ = 0;
  }

  void update(const std::uint8_t* data, std::size_t len) {
    total_bytes_ += len;
    while (len > 0) {
      const std::size_t take =
          std::min<std::size_t>(len, sizeof(buffer_) - buffer_len_);
      std::memcpy(buffer_ + buffer_len_, data, take);
      buffer_len_ += take;
      data += take;
      len -= take;
      if (buffer_len_ == sizeof(buffer_)) {
        process_block(buffer_);
        buffer_len_ = 0;
      }
    }
  }

  void update(std::string_view text) {
    update(reinterpret_cast<const std::uint8_t*>(text.data()), text.size());
  }

  void update_u64(std::uint64_t value) {
    std::uint8_t bytes[8];
    for (int i = 0; i < 8; ++i) {
      bytes[i] = static_cast<std::uint8_t>(value >> (8 * i));
    }
    update(bytes, sizeof(bytes));
  }

  Key256 finish() {
    const std::uint64_t bit_len = total_bytes_ * 8;
    const std::uint8_t pad = 0x80;
    update(&pad, 1);
    const std::uint8_t zero = 0x00;
    while (buffer_len_ != 56) {
      update(&zero, 1);
    }
    std::uint8_t len_bytes[8];
    for (int i = 0; i < 8; ++i) {
      len_bytes[i] = static_cast<std::uint8_t>(bit_len >> (56 - 8 * i));
    }
    // Bypass update() for the length block: total_bytes_ is already frozen.
    std::memcpy(buffer_ + buffer_len_, len_bytes, 8);
    process_block(buffer_);

    Key256 digest;
    for (int i = 0; i < 8; ++i) {
      digest[4 * i + 0] = static_cast<std::uint8_t>(state_[i] >> 24);
      digest[4 * i + 1] = static_cast<std::uint8_t>(state_[i] >> 16);
      digest[4 * i + 2] = static_cast<std::uint8_t>(state_[i] >> 8);
      digest[4 * i + 3] = static_cast<std::uint8_t>(state_[i]);
    }
    return digest;
  }

 private:
  static std::uint32_t rotr(std::uint32_t x, int n) {
    return (x >> n) | (x << (32 - n));
  }

  void process_block(const std::uint8_t block[64]) {
    static constexpr std::uint32_t kRoundConstants[64] = {
        0x428a2f98u, 0x71374491u, 0xb5c0fbcfu, 0xe9b5dba5u, 0x3956c25bu,
        0x59f111f1u, 0x923f82a4u, 0xab1c5ed5u, 0xd807aa98u, 0x12835b01u,
        0x243185beu, 0x550c7dc3u, 0x72be5d74u, 0x80deb1feu, 0x9bdc06a7u,
        0xc19bf174u, 0xe49b69c1u, 0xefbe4786u, 0x0fc19dc6u, 0x240ca1ccu,
        0x2de92c6fu, 0x4a7484aau, 0x5cb0a9dcu, 0x76f988dau, 0x983e5152u,
        0xa831c66du, 0xb00327c8u, 0xbf597fc7u, 0xc6e00bf3u, 0xd5a79147u,
        0x06ca6351u, 0x14292967u, 0x27b70a85u, 0x2e1b2138u, 0x4d2c6dfcu,
        0x53380d13u, 0x650a7354u, 0x766a0abbu, 0x81c2c92eu, 0x92722c85u,
        0xa2bfe8a1u, 0xa81a664bu, 0xc24b8b70u, 0xc76c51a3u, 0xd192e819u,
        0xd6990624u, 0xf40e3585u, 0x106aa070u, 0x19a4c116u, 0x1e376c08u,
        0x2748774cu, 0x34b0bcb5u, 0x391c0cb3u, 0x4ed8aa4au, 0x5b9cca4fu,
        0x682e6ff3u, 0x748f82eeu, 0x78a5636fu, 0x84c87814u, 0x8cc70208u,
        0x90befffau, 0xa4506cebu, 0xbef9a3f7u, 0xc67178f2u};

    std::uint32_t w[64];
    for (int i = 0; i < 16; ++i) {
      w[i] = (static_cast<std::uint32_t>(block[4 * i]) << 24) |
             (static_cast<std::uint32_t>(block[4 * i + 1]) << 16) |
             (static_cast<std::uint32_t>(block[4 * i + 2]) << 8) |
             static_cast<std::uint32_t>(block[4 * i + 3]);
    }
    for (int i = 16; i < 64; ++i) {
      const std::uint32_t s0 =
          rotr(w[i - 15], 7) ^ rotr(w[i - 15], 18) ^ (w[i - 15] >> 3);
      const std::uint32_t s1 =
          rotr(w[i - 2], 17) ^ rotr(w[i - 2], 19) ^ (w[i - 2] >> 10);
      w[i] = w[i - 16] + s0 + w[i - 7] + s1;
    }

    std::uint32_t a = state_[0], b = state_[1], c = state_[2], d = state_[3];
    std::uint32_t e = state_[4], f = state_[5], g = state_[6], h = state_[7];
    for (int i = 0; i < 64; ++i) {
      const std::uint32_t s1 = rotr(e, 6) ^ rotr(e, 11) ^ rotr(e, 25);
      const std::uint32_t ch = (e & f) ^ (~e & g);
      const std::uint32_t temp1 = h + s1 + ch + kRoundConstants[i] + w[i];
      const std::uint32_t s0 = rotr(a, 2) ^ rotr(a, 13) ^ rotr(a, 22);
      const std::uint32_t maj = (a & b) ^ (a & c) ^ (b & c);
      const std::uint32_t temp2 = s0 + maj;
      h = g;
      g = f;
      f = e;
      e = d + temp1;
      d = c;
      c = b;
      b = a;
      a = temp1 + temp2;
    }
    state_[0] += a;
    state_[1] += b;
    state_[2] += c;
    state_[3] += d;
    state_[4] += e;
    state_[5] += f;
    state_[6] += g;
    state_[7] += h;
  }

  std::array<std::uint32_t, 8> state_;
  std::uint64_t total_bytes_ = 0;
  std::uint8_t buffer_[64];
  std::size_t buffer_len_ = 0;
};

// ---------------------------------------------------------------------------
// ChaCha20 block function (RFC 8439). Each RngStream owns a distinct derived
// key, so the nonce is fixed at zero and the 32-bit block counter gives
// 256 GiB of keystream per stream. Checked against the RFC test vector.
// ---------------------------------------------------------------------------
inline void chacha20_block(const Key256& key, std::uint32_t counter,
                           const std::array<std::uint32_t, 3>& nonce,
                           std::uint8_t out[64]) {
  auto load32 = [](const std::uint8_t* p) {
    return static_cast<std::uint32_t>(p[0]) |
           (static_cast<std::uint32_t>(p[1]) << 8) |
           (static_cast<std::uint32_t>(p[2]) << 16) |
           (static_cast<std::uint32_t>(p[3]) << 24);
  };
  std::uint32_t state[16];
  state[0] = 0x61707865u;
  state[1] = 0x3320646eu;
  state[2] = 0x79622d32u;
  state[3] = 0x6b206574u;
  for (int i = 0; i < 8; ++i) {
    state[4 + i] = load32(key.data() + 4 * i);
  }
  state[12] = counter;
  state[13] = nonce[0];
  state[14] = nonce[1];
  state[15] = nonce[2];

  std::uint32_t x[16];
  std::memcpy(x, state, sizeof(x));
  auto rotl = [](std::uint32_t v, int n) { return (v << n) | (v >> (32 - n)); };
  auto quarter = [&rotl](std::uint32_t& a, std::uint32_t& b, std::uint32_t& c,
                         std::uint32_t& d) {
    a += b; d ^= a; d = rotl(d, 16);
    c += d; b ^= c; b = rotl(b, 12);
    a += b; d ^= a; d = rotl(d, 8);
    c += d; b ^= c; b = rotl(b, 7);
  };
  for (int round = 0; round < 10; ++round) {
    quarter(x[0], x[4], x[8], x[12]);
    quarter(x[1], x[5], x[9], x[13]);
    quarter(x[2], x[6], x[10], x[14]);
    quarter(x[3], x[7], x[11], x[15]);
    quarter(x[0], x[5], x[10], x[15]);
    quarter(x[1], x[6], x[11], x[12]);
    quarter(x[2], x[7], x[8], x[13]);
    quarter(x[3], x[4], x[9], x[14]);
  }
  for (int i = 0; i < 16; ++i) {
    const std::uint32_t word = x[i] + state[i];
    out[4 * i + 0] = static_cast<std::uint8_t>(word);
    out[4 * i + 1] = static_cast<std::uint8_t>(word >> 8);
    out[4 * i + 2] = static_cast<std::uint8_t>(word >> 16);
    out[4 * i + 3] = static_cast<std::uint8_t>(word >> 24);
  }
}

}  // namespace detail

// Expands a user-facing 64-bit seed into a full-entropy master key.
inline Key256 expand_seed(std::uint64_t seed) {
  detail::Sha256 hash;
  hash.update("inftda.seed.v1");
  hash.update_u64(seed);
  return hash.finish();
}

// Derives an independent child key from (parent key, label, parts). Every
// field is length-prefixed so distinct inputs never collide as byte strings.
inline Key256 derive_key(const Key256& parent, std::string_view label,
                         const std::vector<std::uint64_t>& parts = {}) {
  detail::Sha256 hash;
  hash.update("inftda.derive.v1");
  hash.update(parent.data(), parent.size());
  hash.update_u64(label.size());
  hash.update(label);
  hash.update_u64(parts.size());
  for (std::uint64_t part : parts) {
    hash.update_u64(part);
  }
  return hash.finish();
}

// Deterministic counter-based pseudo-random stream. Two streams with the
// same key produce the same output sequence; streams with distinct derived
// keys are independent for all practical purposes. Not thread-safe: each
// worker derives its own stream.
class RngStream {
 public:
  explicit RngStream(const Key256& key) : key_(key) {}

  std::uint64_t next_u64() {
    if (buffer_pos_ == kBlockBytes) {
      detail::chacha20_block(key_, counter_++, {0, 0, 0}, buffer_);
      buffer_pos_ = 0;
    }
    std::uint64_t value = 0;
    for (int i = 0; i < 8; ++i) {
      value |= static_cast<std::uint64_t>(buffer_[buffer_pos_ + i]) << (8 * i);
    }
    buffer_pos_ += 8;
    return value;
  }

  // Unbiased uniform draw from {0, ..., bound-1}.
  std::uint64_t uniform_below(std::uint64_t bound) {
    if (bound == 0) {
      throw InvalidArgument("uniform_below: bound must be positive");
    }
    if ((bound & (bound - 1)) == 0) {
      return next_u64() & (bound - 1);
    }
    const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
    for (;;) {
      const std::uint64_t draw = next_u64();
      if (draw >= threshold) {
        return draw % bound;
      }
    }
  }

  // Unbiased uniform draw from {0, ..., bound-1} for arbitrary-size bounds.
  BigInt uniform_below(const BigInt& bound) {
    if (bound <= 0) {
      throw InvalidArgument("uniform_below: bound must be positive");
    }
    if (bound <= BigInt(UINT64_MAX)) {
      return BigInt(uniform_below(bound.convert_to<std::uint64_t>()));
    }
    const std::size_t bits = msb(bound) + 1;
    const std::size_t words = (bits + 63) / 64;
    const std::size_t top_bits = bits - 64 * (words - 1);
    const std::uint64_t top_mask =
        top_bits == 64 ? ~0ull : ((1ull << top_bits) - 1);
    for (;;) {
      BigInt value = 0;
      for (std::size_t w = 0; w < words; ++w) {
        std::uint64_t word = next_u64();
        if (w + 1 == words) {
          word &= top_mask;
        }
        value |= BigInt(word) << (64 * w);
      }
      if (value < bound) {
        return value;
      }
    }
  }

  // Single fair bit; buffered so bulk Bernoulli(1/2) draws stay cheap.
  bool next_bit() {
    if (bit_count_ == 0) {
      bit_word_ = next_u64();
      bit_count_ = 64;
    }
    const bool bit = (bit_word_ & 1) != 0;
    bit_word_ >>= 1;
    --bit_count_;
    return bit;
  }

 private:
  static constexpr std::size_t kBlockBytes = 64;

  Key256 key_;
  std::uint32_t counter_ = 0;
  std::uint8_t buffer_[kBlockBytes] = {};
  std::size_t buffer_pos_ = kBlockBytes;
  std::uint64_t bit_word_ = 0;
  int bit_count_ = 0;
};

}  // namespace inftda

#endif  // INFTDA_RNG_HPP_
