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

// Deterministic pseudo-random source shared by every stochastic decision in a
// campaign. The generator is RomuDuoJr (two 64-bit words of state), chosen for
// speed; it is not suitable for anything security related.
//
// Draw conventions (all bit-exact, relied upon by replay tests):
//   NextU64()     one RomuDuoJr step, returns the previous x word.
//   Below(b)      ((NextU64() >> 32) * b) >> 32, i.e. multiply-high of the
//                 upper 32 bits; uniform in [0, b), one draw.
//   UnitDouble()  (NextU64() >> 11) * 2^-53, uniform in [0, 1), one draw.
//   Gaussian()    Box-Muller on two UnitDouble() draws u1, u2:
//                 sqrt(-2 ln(1 - u1)) * cos(2 pi u2).
#ifndef DARWINFUZZ_RNG_H_
#define DARWINFUZZ_RNG_H_

#include <cstdint>

namespace darwinfuzz {

class Rng {
 public:
  static constexpr uint64_t kMultiplier = 15241094284759029579ULL;
  static constexpr int kRotation = 27;
  // Used in place of a zero seed.
  static constexpr uint64_t kZeroSeedSubstitute = 0x9E3779B97F4A7C15ULL;

  // The stream is a pure function of `seed`. Both state words are expanded
  // from the (substituted) seed with SplitMix64.
  explicit Rng(uint64_t seed);

  // Raw state constructor for tests and replay. An all-zero pair is replaced
  // by the state of Rng(0).
  static Rng FromState(uint64_t x, uint64_t y);

  uint64_t NextU64() {
    const uint64_t xp = x_;
    x_ = kMultiplier * y_;
    y_ = y_ - xp;
    y_ = (y_ << kRotation) | (y_ >> (64 - kRotation));
    return xp;
  }

  // Requires bound >= 1; callers validate.
  uint32_t Below(uint32_t bound) {
    return static_cast<uint32_t>(((NextU64() >> 32) * bound) >> 32);
  }

  double UnitDouble() {
    return static_cast<double>(NextU64() >> 11) * 0x1.0p-53;
  }

  double Gaussian();

  uint64_t seed() const { return seed_; }
  uint64_t state_x() const { return x_; }
  uint64_t state_y() const { return y_; }

 private:
  Rng() = default;

  uint64_t seed_ = 0;
  uint64_t x_ = 0;
  uint64_t y_ = 0;
};

// One SplitMix64 output for `state`, advancing it.
uint64_t SplitMix64(uint64_t &state);

}  // namespace darwinfuzz

#endif  // DARWINFUZZ_RNG_H_
