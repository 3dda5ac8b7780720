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
#include <numbers>

namespace darwinfuzz {

uint64_t SplitMix64(uint64_t &state) {
  uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Rng::Rng(uint64_t seed) : seed_(seed) {
  uint64_t s = seed == 0 ? kZeroSeedSubstitute : seed;
  x_ = SplitMix64(s);
  y_ = SplitMix64(s);
  if (x_ == 0 && y_ == 0) x_ = kZeroSeedSubstitute;
}

Rng Rng::FromState(uint64_t x, uint64_t y) {
  if (x == 0 && y == 0) return Rng(0);
  Rng rng;
  rng.x_ = x;
  rng.y_ = y;
  return rng;
}

double Rng::Gaussian() {
  const double u1 = UnitDouble();
  const double u2 = UnitDouble();
  return std::sqrt(-2.0 * std::log(1.0 - u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace darwinfuzz
