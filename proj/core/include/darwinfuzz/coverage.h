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

// Edge coverage: raw hit-count maps, AFL-style bucketization, path identity,
// and the campaign-global coverage state.
#ifndef DARWINFUZZ_COVERAGE_H_
#define DARWINFUZZ_COVERAGE_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <unordered_set>

namespace darwinfuzz {

inline constexpr size_t kMapSize = 65536;
inline constexpr int kNumBuckets = 9;  // bucket codes 0..8

// Edge id -> saturating 8-bit hit count. This is also the on-disk format for
// external targets: exactly kMapSize bytes, byte i = count of edge i.
struct RawMap {
  std::array<uint8_t, kMapSize> counts{};

  void Clear() { counts.fill(0); }
  // Saturating increment.
  void Hit(size_t edge, unsigned times = 1) {
    const unsigned v = counts[edge] + times;
    counts[edge] = static_cast<uint8_t>(v > 255 ? 255 : v);
  }
};

// Edge id -> bucket code of the corresponding RawMap counter.
struct ClassifiedMap {
  std::array<uint8_t, kMapSize> buckets{};
};

// Upper bounds (inclusive) of each bucket code: 0,1,2,3,4-7,8-15,16-31,
// 32-127,128-255.
inline constexpr std::array<uint8_t, kNumBuckets> kBucketUpperBounds = {
    0, 1, 2, 3, 7, 15, 31, 127, 255};

uint8_t Classify(uint8_t count);
void ClassifyMap(const RawMap &raw, ClassifiedMap &out);

inline constexpr uint64_t kFnvOffsetBasis = 0xcbf29ce484222325ULL;
inline constexpr uint64_t kFnvPrime = 0x100000001b3ULL;

// FNV-1a 64 over (edge index as 4 little-endian bytes, bucket code byte) for
// every nonzero entry in ascending edge order.
uint64_t PathId(const ClassifiedMap &map);

struct Feedback {
  bool new_path = false;
  uint32_t new_edges = 0;
  uint32_t new_buckets = 0;
};

class GlobalCoverage {
 public:
  GlobalCoverage();

  Feedback Absorb(const ClassifiedMap &map);

  size_t edges_covered() const { return edges_covered_; }
  size_t unique_paths() const { return path_hashes_.size(); }
  bool HasPath(uint64_t path_id) const { return path_hashes_.contains(path_id); }
  // Bit b set iff bucket code b has been seen on `edge`.
  uint16_t SeenBuckets(size_t edge) const { return seen_buckets_[edge]; }

 private:
  std::array<uint16_t, kMapSize> seen_buckets_;
  std::unordered_set<uint64_t> path_hashes_;
  size_t edges_covered_ = 0;
};

}  // namespace darwinfuzz

#endif  // DARWINFUZZ_COVERAGE_H_
