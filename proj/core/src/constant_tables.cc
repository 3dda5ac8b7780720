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

#include "darwinfuzz/constant_tables.h"

#include <charconv>
#include <cstdio>
#include <stdexcept>

#include "darwinfuzz/coverage.h"
#include "darwinfuzz/es.h"
#include "darwinfuzz/executor.h"
#include "darwinfuzz/mutators.h"
#include "darwinfuzz/rng.h"

namespace darwinfuzz {
namespace {

template <typename Array>
std::string RenderValues(const Array &values) {
  std::string out = "| index | value | hex |\n|---|---|---|\n";
  for (size_t i = 0; i < values.size(); ++i) {
    const long long v = values[i];
    char hex[32];
    const unsigned long long bits =
        static_cast<unsigned long long>(v) &
        ((sizeof(values[i]) == 8) ? ~0ULL : ((1ULL << (8 * sizeof(values[i]))) - 1));
    std::snprintf(hex, sizeof(hex), "0x%0*llX", static_cast<int>(2 * sizeof(values[i])),
                  bits);
    out += "| " + std::to_string(i) + " | " + std::to_string(v) + " | " + hex + " |\n";
  }
  return out;
}

std::string Hex64(unsigned long long v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "0x%016llX", v);
  return buf;
}

std::string RenderBuckets() {
  std::string out = "| hit count | bucket |\n|---|---|\n";
  unsigned lo = 0;
  for (size_t code = 0; code < kBucketUpperBounds.size(); ++code) {
    const unsigned hi = kBucketUpperBounds[code];
    out += "| " + (lo == hi ? std::to_string(lo)
                            : std::to_string(lo) + "-" + std::to_string(hi)) +
           " | " + std::to_string(code) + " |\n";
    lo = hi + 1;
  }
  return out;
}

std::string RenderPrng() {
  std::string out = "| constant | value |\n|---|---|\n";
  out += "| RomuDuoJr multiplier | " + std::to_string(Rng::kMultiplier) + " |\n";
  out += "| RomuDuoJr rotation | " + std::to_string(Rng::kRotation) + " |\n";
  out += "| zero-seed substitute | " + Hex64(Rng::kZeroSeedSubstitute) + " |\n";
  out += "| FNV-1a offset basis | " + Hex64(kFnvOffsetBasis) + " |\n";
  out += "| FNV-1a prime | " + Hex64(kFnvPrime) + " |\n";
  return out;
}

std::string RenderOperators() {
  std::string out = "| id | name | skip draws |\n|---|---|---|\n";
  for (size_t id = 0; id < kNumMutators; ++id) {
    out += "| " + std::to_string(id) + " | " +
           std::string(MutatorName(static_cast<MutatorId>(id))) + " | " +
           std::to_string(kSkipDraws[id]) + " |\n";
  }
  out += "\nArithmetic delta range: 1.." + std::to_string(kArithMax) +
         "; max block length: " + std::to_string(kMaxBlockLen) +
         "; max extra length: " + std::to_string(kMaxExtraLen) + ".\n";
  return out;
}

std::string RenderBitmaze() {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "0x%08X", kBitmazePattern);
  std::string bits;
  for (int k = 31; k >= 0; --k) bits.push_back(((kBitmazePattern >> k) & 1) ? '1' : '0');
  return "| constant | value |\n|---|---|\n| pattern | " + std::string(buf) +
         " |\n| pattern bits (31..0) | " + bits + " |\n| ladder edges | " +
         std::to_string(kBitmazeEdges) + " (map indices 0.." +
         std::to_string(kBitmazeEdges - 1) + ") |\n";
}

std::string ShortestDouble(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string RenderEs() {
  return "| constant | value |\n|---|---|\n| weight floor | " +
         ShortestDouble(kWeightFloor) + " |\n| perturbation sigma | " +
         ShortestDouble(kPerturbSigma) + " |\n";
}

}  // namespace

std::vector<std::string_view> ConstantTableNames() {
  return {"interesting8", "interesting16", "interesting32", "buckets",
          "prng",         "operators",     "bitmaze",       "es"};
}

std::string RenderConstantTable(std::string_view name) {
  if (name == "interesting8") return RenderValues(kInteresting8);
  if (name == "interesting16") return RenderValues(kInteresting16);
  if (name == "interesting32") return RenderValues(kInteresting32);
  if (name == "buckets") return RenderBuckets();
  if (name == "prng") return RenderPrng();
  if (name == "operators") return RenderOperators();
  if (name == "bitmaze") return RenderBitmaze();
  if (name == "es") return RenderEs();
  throw std::out_of_range("unknown constant table: " + std::string(name));
}

}  // namespace darwinfuzz
