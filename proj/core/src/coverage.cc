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

#include "darwinfuzz/coverage.h"

#include <cstring>

namespace darwinfuzz {
namespace {

constexpr std::array<uint8_t, 256> MakeBucketTable() {
  std::array<uint8_t, 256> table{};
  for (unsigned count = 0; count < 256; ++count) {
    uint8_t code = 0;
    while (count > kBucketUpperBounds[code]) ++code;
    table[count] = code;
  }
  return table;
}

constexpr std::array<uint8_t, 256> kBucketTable = MakeBucketTable();

constexpr size_t kWords = kMapSize / sizeof(uint64_t);

uint64_t LoadWord(const uint8_t *p) {
  uint64_t w;
  std::memcpy(&w, p, sizeof(w));
  return w;
}

}  // namespace

uint8_t Classify(uint8_t count) { return kBucketTable[count]; }

void ClassifyMap(const RawMap &raw, ClassifiedMap &out) {
  const uint8_t *src = raw.counts.data();
  uint8_t *dst = out.buckets.data();
  for (size_t w = 0; w < kWords; ++w, src += 8, dst += 8) {
    if (LoadWord(src) == 0) {
      std::memset(dst, 0, 8);
      continue;
    }
    for (int i = 0; i < 8; ++i) dst[i] = kBucketTable[src[i]];
  }
}

uint64_t PathId(const ClassifiedMap &map) {
  uint64_t hash = kFnvOffsetBasis;
  auto mix = [&hash](uint8_t byte) {
    hash ^= byte;
    hash *= kFnvPrime;
  };
  const uint8_t *p = map.buckets.data();
  for (size_t w = 0; w < kWords; ++w) {
    if (LoadWord(p + w * 8) == 0) continue;
    for (size_t i = w * 8; i < w * 8 + 8; ++i) {
      if (p[i] == 0) continue;
      const uint32_t edge = static_cast<uint32_t>(i);
      mix(edge & 0xff);
      mix((edge >> 8) & 0xff);
      mix((edge >> 16) & 0xff);
      mix((edge >> 24) & 0xff);
      mix(p[i]);
    }
  }
  return hash;
}

GlobalCoverage::GlobalCoverage() { seen_buckets_.fill(0); }

Feedback GlobalCoverage::Absorb(const ClassifiedMap &map) {
  Feedback fb;
  const uint8_t *p = map.buckets.data();
  for (size_t w = 0; w < kWords; ++w) {
    if (LoadWord(p + w * 8) == 0) continue;
    for (size_t i = w * 8; i < w * 8 + 8; ++i) {
      if (p[i] == 0) continue;
      const uint16_t bit = static_cast<uint16_t>(1u << p[i]);
      uint16_t &seen = seen_buckets_[i];
      if (seen & bit) continue;
      if (seen == 0) {
        ++fb.new_edges;
        ++edges_covered_;
      }
      seen |= bit;
      ++fb.new_buckets;
    }
  }
  fb.new_path = path_hashes_.insert(PathId(map)).second;
  return fb;
}

}  // namespace darwinfuzz
