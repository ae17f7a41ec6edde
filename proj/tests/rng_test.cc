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

#include "inftda/rng.hpp"

#include <cstdint>
#include <string>
#include <vector>

#include <gtest/gtest.h>

namespace inftda {
namespace {

std::string hex(const std::uint8_t* data, std::size_t len) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (std::size_t i = 0; i < len; ++i) {
    out.push_back(digits[data[i] >> 4]);
    out.push_back(digits[data[i] & 0x0f]);
  }
  return out;
}

// FIPS 180-4 test vectors.
TEST(Sha256, KnownVectors) {
  detail::Sha256 h;
  EXPECT_EQ(hex(h.finish().data(), 32),
            "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");

  h.reset();
  h.update("abc");
  EXPECT_EQ(hex(h.finish().data(), 32),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");

  h.reset();
  h.update("abcdbcdecdefdefgefghfghighijhijkijkljklmklmnlmnomnopnopq");
  EXPECT_EQ(hex(h.finish().data(), 32),
            "248d6a61d20638b8e5c026930c3e6039a33ce45964ff2167f6ecedd419db06c1");
}

TEST(Sha256, MultiBlockMessage) {
  detail::Sha256 h;
  // One million 'a' characters, fed in uneven pieces.
  const std::string chunk(997, 'a');
  std::size_t fed = 0;
  while (fed + chunk.size() <= 1000000) {
    h.update(chunk);
    fed += chunk.size();
  }
  h.update(std::string(1000000 - fed, 'a'));
  EXPECT_EQ(hex(h.finish().data(), 32),
            "cdc76e5c9914fb9281a1c7e284d73e67f1809a48a497200e046d39ccc7112cd0");
}

// RFC 8439 section 2.3.2 block function vector.
TEST(ChaCha20, Rfc8439BlockVector) {
  Key256 key;
  for (int i = 0; i < 32; ++i) {
    key[i] = static_cast<std::uint8_t>(i);
  }
  // Nonce bytes 00:00:00:09:00:00:00:4a:00:00:00:00 as little-endian words.
  const std::array<std::uint32_t, 3> nonce{0x09000000u, 0x4a000000u, 0u};
  std::uint8_t block[64];
  detail::chacha20_block(key, 1, nonce, block);
  EXPECT_EQ(hex(block, 64),
            "10f1e7e4d13b5915500fdd1fa32071c4c7d1f4c733c068030422aa9ac3d46c4e"
            "d2826446079faa0914c2d705d98b02a2b5129cd1de164eb9cbd083e8a2503c4e");
}

TEST(ExpandSeed, DistinctSeedsDistinctKeys) {
  EXPECT_NE(expand_seed(0), expand_seed(1));
  EXPECT_EQ(expand_seed(42), expand_seed(42));
}

TEST(DeriveKey, SeparatesLabelsAndParts) {
  const Key256 master = expand_seed(7);
  EXPECT_NE(derive_key(master, "node"), derive_key(master, "trial"));
  EXPECT_NE(derive_key(master, "node", {1}), derive_key(master, "node", {2}));
  EXPECT_NE(derive_key(master, "node", {1, 0}),
            derive_key(master, "node", {1}));
  EXPECT_EQ(derive_key(master, "node", {1, 2, 3}),
            derive_key(master, "node", {1, 2, 3}));
}

TEST(RngStream, DeterministicPerKey) {
  RngStream a(expand_seed(123));
  RngStream b(expand_seed(123));
  for (int i = 0; i < 100; ++i) {
    EXPECT_EQ(a.next_u64(), b.next_u64());
  }
  RngStream c(expand_seed(124));
  bool differs = false;
  RngStream a2(expand_seed(123));
  for (int i = 0; i < 10; ++i) {
    differs |= (a2.next_u64() != c.next_u64());
  }
  EXPECT_TRUE(differs);
}

TEST(RngStream, UniformBelowStaysInRange) {
  RngStream rng(expand_seed(5));
  for (std::uint64_t bound : {1ull, 2ull, 3ull, 10ull, 1000ull, (1ull << 33)}) {
    for (int i = 0; i < 200; ++i) {
      EXPECT_LT(rng.uniform_below(bound), bound);
    }
  }
  EXPECT_THROW(rng.uniform_below(std::uint64_t{0}), InvalidArgument);
}

TEST(RngStream, UniformBelowIsRoughlyUniform) {
  RngStream rng(expand_seed(6));
  const std::uint64_t bound = 5;
  const int draws = 50000;
  std::vector<int> counts(bound, 0);
  for (int i = 0; i < draws; ++i) {
    ++counts[rng.uniform_below(bound)];
  }
  // 5 sigma band around draws/bound with sigma = sqrt(n p (1-p)).
  const double expected = static_cast<double>(draws) / bound;
  const double sigma = std::sqrt(draws * 0.2 * 0.8);
  for (std::uint64_t v = 0; v < bound; ++v) {
    EXPECT_NEAR(counts[v], expected, 5 * sigma);
  }
}

TEST(RngStream, BigUniformMatchesBound) {
  RngStream rng(expand_seed(9));
  const BigInt bound = BigInt("123456789012345678901234567890");
  for (int i = 0; i < 200; ++i) {
    const BigInt draw = rng.uniform_below(bound);
    EXPECT_GE(draw, 0);
    EXPECT_LT(draw, bound);
  }
  // Small bounds route through the 64-bit path.
  EXPECT_LT(rng.uniform_below(BigInt(7)), 7);
}

TEST(RngStream, BitsAreFair) {
  RngStream rng(expand_seed(10));
  int ones = 0;
  const int draws = 100000;
  for (int i = 0; i < draws; ++i) {
    ones += rng.next_bit() ? 1 : 0;
  }
  EXPECT_NEAR(ones, draws / 2, 5 * std::sqrt(draws * 0.25));
}

}  // namespace
}  // namespace inftda
