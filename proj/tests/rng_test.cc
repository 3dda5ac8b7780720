// Copyright 2026 The darwinfuzz Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "darwinfuzz/rng.h"

#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include "gtest/gtest.h"

namespace darwinfuzz {
namespace {

// Straight from the published generator: x' = m*y, y' = rotl(y - x, 27).
struct ModelRomuDuoJr {
  uint64_t x, y;
  uint64_t Next() {
    const uint64_t out = x;
    const uint64_t d = y - x;
    x = 15241094284759029579ULL * y;
    y = (d << 27) | (d >> 37);
    return out;
  }
};

uint64_t ModelSplitMix(uint64_t &s) {
  s += 0x9e3779b97f4a7c15ULL;
  uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

TEST(RngTest, HandStepFromSmallState) {
  Rng rng = Rng::FromState(3, 5);
  EXPECT_EQ(rng.NextU64(), 3u);
  EXPECT_EQ(rng.state_x(), 2418495128956941431ULL);
  EXPECT_EQ(rng.state_y(), 268435456ULL);
}

TEST(RngTest, SeedOneStream) {
  Rng rng(1);
  EXPECT_EQ(rng.NextU64(), 0x910a2dec89025cc1ULL);
  EXPECT_EQ(rng.NextU64(), 0x18d1beae4aca432dULL);
  EXPECT_EQ(rng.NextU64(), 0xbd21b2558e60331fULL);
  EXPECT_EQ(rng.NextU64(), 0x5ef53dc88b56567aULL);
}

TEST(RngTest, SeedTwoFirstOutput) {
  Rng rng(2);
  EXPECT_EQ(rng.NextU64(), 0x975835de1c9756ceULL);
}

TEST(RngTest, ZeroSeedIsSubstituted) {
  Rng zero(0);
  EXPECT_EQ(zero.state_x(), 0x6e789e6aa1b965f4ULL);
  EXPECT_EQ(zero.state_y(), 0x06c45d188009454fULL);
  Rng sub(Rng::kZeroSeedSubstitute);
  EXPECT_EQ(zero.state_x(), sub.state_x());
  EXPECT_EQ(zero.state_y(), sub.state_y());
  EXPECT_NE(zero.state_x() | zero.state_y(), 0u);
}

TEST(RngTest, AllZeroStateIsReplaced) {
  Rng rng = Rng::FromState(0, 0);
  Rng zero(0);
  EXPECT_EQ(rng.state_x(), zero.state_x());
  EXPECT_EQ(rng.state_y(), zero.state_y());
}

TEST(RngTest, MatchesModelForManySeeds) {
  for (uint64_t seed : {1ULL, 2ULL, 42ULL, 0xdeadbeefULL, ~0ULL}) {
    uint64_t s = seed;
    ModelRomuDuoJr model{0, 0};
    model.x = ModelSplitMix(s);
    model.y = ModelSplitMix(s);
    Rng rng(seed);
    for (int i = 0; i < 1000; ++i) ASSERT_EQ(rng.NextU64(), model.Next()) << seed;
  }
}

TEST(RngTest, SameSeedSameStream) {
  Rng a(77), b(77), c(78);
  bool differs = false;
  for (int i = 0; i < 100; ++i) {
    const uint64_t va = a.NextU64();
    EXPECT_EQ(va, b.NextU64());
    differs |= va != c.NextU64();
  }
  EXPECT_TRUE(differs);
}

TEST(RngTest, BelowStaysInRange) {
  Rng rng(9);
  for (uint32_t bound : {1u, 2u, 3u, 17u, 255u, 65536u, 0xffffffffu}) {
    for (int i = 0; i < 2000; ++i) ASSERT_LT(rng.Below(bound), bound);
  }
}

TEST(RngTest, BelowUsesHighBits) {
  Rng a(5), b(5);
  for (int i = 0; i < 100; ++i) {
    const uint64_t raw = b.NextU64();
    ASSERT_EQ(a.Below(1000), ((raw >> 32) * 1000) >> 32);
  }
}

TEST(RngTest, BelowSeventeenIsRoughlyUniform) {
  Rng rng(1);
  constexpr int kDraws = 170000;
  std::vector<int> counts(17, 0);
  for (int i = 0; i < kDraws; ++i) ++counts[rng.Below(17)];
  const double expected = kDraws / 17.0;
  double chi2 = 0;
  for (int c : counts) chi2 += (c - expected) * (c - expected) / expected;
  // 16 degrees of freedom; 0.999 quantile is about 39.25.
  EXPECT_LT(chi2, 39.25);
}

TEST(RngTest, GoldenBelow256Stream) {
  std::ifstream in(DARWINFUZZ_SOURCE_DIR "/tests/golden/rng_below256_seed1.txt");
  ASSERT_TRUE(in);
  std::vector<uint32_t> golden;
  for (uint32_t v; in >> v;) golden.push_back(v);
  ASSERT_FALSE(golden.empty());
  Rng rng(1);
  for (uint32_t v : golden) EXPECT_EQ(rng.Below(256), v);
}

TEST(RngTest, UnitDoubleInHalfOpenInterval) {
  Rng rng(3);
  double sum = 0;
  for (int i = 0; i < 100000; ++i) {
    const double u = rng.UnitDouble();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
  }
  EXPECT_NEAR(sum / 100000, 0.5, 0.01);
}

TEST(RngTest, GaussianMoments) {
  Rng rng(11);
  constexpr int kN = 200000;
  double sum = 0, sq = 0;
  for (int i = 0; i < kN; ++i) {
    const double g = rng.Gaussian();
    ASSERT_TRUE(std::isfinite(g));
    sum += g;
    sq += g * g;
  }
  const double mean = sum / kN;
  EXPECT_NEAR(mean, 0.0, 0.02);
  EXPECT_NEAR(sq / kN - mean * mean, 1.0, 0.02);
}

}  // namespace
}  // namespace darwinfuzz
