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

// The 17 havoc-stage mutation operators, stacked havoc application, and splice
// crossover.
//
// Every operator consumes a fixed, documented sequence of Rng draws (see
// docs/operators.md). R(b) below means Rng::Below(b); n is the input length.
//
//   id  name                 needs        draws (in order)
//   0   flip bit             n >= 1       bit = R(8n)
//   1   interesting byte     n >= 1       pos = R(n), idx = R(9)
//   2   interesting word     n >= 2       be = R(2), pos = R(n-1), idx = R(19)
//   3   interesting dword    n >= 4       be = R(2), pos = R(n-3), idx = R(27)
//   4/5 sub/add byte         n >= 1       pos = R(n), delta = 1 + R(35)
//   6/7 sub/add word         n >= 2       be = R(2), pos = R(n-1), delta
//   8/9 sub/add dword        n >= 4       be = R(2), pos = R(n-3), delta
//   10  xor random byte      n >= 1       pos = R(n), x = 1 + R(255)
//   11/12 delete block       n >= 1       len = 1 + R(min(n,64)),
//                                         pos = R(n-len+1)
//   13  clone/insert block   -            c = R(4); clone iff c != 0 && n >= 1
//        clone:                           len = 1 + R(min(n,64)),
//                                         from = R(n-len+1), to = R(n+1)
//        constant:                        len = 1 + R(64), to = R(n+1),
//                                         src = R(2), value = n >= 1 && src
//                                         ? input[R(n)] : R(256)
//   14  overwrite block      n >= 2       c = R(4), len = 1 + R(min(n-1,64)),
//                                         from = R(n-len+1), to = R(n-len+1);
//                                         c == 0 -> src = R(2), value as in 13
//                                         (from is unused)
//   15  overwrite w/ extra   extras, fits idx = R(k), pos = R(n-|e|+1)
//   16  insert extra         extras       idx = R(k), pos = R(n+1)
//
// be = 1 selects big-endian. An operator whose length precondition fails
// returns applied=false with the input untouched, after consuming
// kSkipDraws[id] raw NextU64() draws. Insertions that would exceed the length
// cap consume their normal draws and return applied=false.
#ifndef DARWINFUZZ_MUTATORS_H_
#define DARWINFUZZ_MUTATORS_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "darwinfuzz/common.h"
#include "darwinfuzz/rng.h"

namespace darwinfuzz {

class Scheduler;

using MutatorId = uint8_t;
inline constexpr size_t kNumMutators = 17;

enum Mutator : MutatorId {
  kFlipBit = 0,
  kInterestingByte = 1,
  kInterestingWord = 2,
  kInterestingDword = 3,
  kSubByte = 4,
  kAddByte = 5,
  kSubWord = 6,
  kAddWord = 7,
  kSubDword = 8,
  kAddDword = 9,
  kRandomByte = 10,
  kDeleteBytes = 11,
  kDeleteBytes2 = 12,  // same operation as 11, separately schedulable
  kCloneOrInsert = 13,
  kOverwriteBlock = 14,
  kOverwriteExtra = 15,
  kInsertExtra = 16,
};

std::string_view MutatorName(MutatorId id);

inline constexpr uint32_t kArithMax = 35;
inline constexpr uint32_t kMaxBlockLen = 64;
inline constexpr size_t kMaxExtraLen = 32;

inline constexpr std::array<int8_t, 9> kInteresting8 = {-128, -1, 0,  1,  16,
                                                        32,   64, 100, 127};
inline constexpr std::array<int16_t, 19> kInteresting16 = {
    -128, -1,   0,   1,   16,  32,   64,   100,  127,  -32768,
    -129, 128,  255, 256, 512, 1000, 1024, 4096, 32767};
inline constexpr std::array<int32_t, 27> kInteresting32 = {
    -128,        -1,         0,      1,     16,    32,        64,
    100,         127,        -32768, -129,  128,   255,       256,
    512,         1000,       1024,   4096,  32767, -2147483647 - 1,
    -100663046,  -32769,     32768,  65535, 65536, 100663045, 2147483647};

inline constexpr std::array<uint8_t, kNumMutators> kSkipDraws = {
    1, 2, 3, 3, 2, 2, 3, 3, 3, 3, 2, 2, 2, 0, 4, 2, 2};

// Target-specific tokens, each 1..32 bytes.
using ExtrasDict = std::vector<ByteArray>;

// Parses the AFL dictionary subset: one token per line, `"..."` or
// `name="..."`, with \xNN, \\ and \" escapes; blank lines and `#` comments are
// skipped. Throws StartupError on malformed lines or bad token lengths.
ExtrasDict ParseDictionary(std::string_view text);
ExtrasDict LoadDictionary(const std::filesystem::path &path);

// Applies operator `id` to `data` in place. Returns false (data untouched)
// when the operator is inapplicable.
bool ApplyInPlace(MutatorId id, ByteArray &data, Rng &rng,
                  const ExtrasDict &extras,
                  size_t max_len = kDefaultMaxInputLen);

struct Outcome {
  ByteArray output;
  bool applied = false;
};

Outcome Apply(MutatorId id, std::span<const uint8_t> input, Rng &rng,
              const ExtrasDict &extras, size_t max_len = kDefaultMaxInputLen);

struct HavocResult {
  ByteArray output;
  std::vector<MutatorId> mutations_used;
};

// Stack size 2^(1 + R(7)), then that many Scheduler::Select + apply rounds.
HavocResult Havoc(std::span<const uint8_t> input, Rng &rng,
                  Scheduler &scheduler, const ExtrasDict &extras,
                  size_t max_len = kDefaultMaxInputLen);

// In-place variant used by the fuzz loop; appends selected ids to `used`
// (cleared first) and returns the stack size.
size_t HavocInPlace(ByteArray &data, Rng &rng, Scheduler &scheduler,
                    const ExtrasDict &extras, size_t max_len,
                    std::vector<MutatorId> &used);

// Crossover between the first and last differing bytes of a and b. Absent
// when either input is shorter than 2 bytes or the differing span is too
// narrow. Consumes one draw only when a result is produced.
std::optional<ByteArray> Splice(std::span<const uint8_t> a,
                                std::span<const uint8_t> b, Rng &rng);

}  // namespace darwinfuzz

#endif  // DARWINFUZZ_MUTATORS_H_
