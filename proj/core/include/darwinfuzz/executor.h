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

// Targets: deterministic builtin programs for desk-scale experiments, and an
// external-command protocol for real programs.
//
// External protocol: the input is written to a temp file whose path replaces
// the single `@@` placeholder in the command; the process gets COVERAGE_OUT
// naming a fresh path where it must write a kMapSize-byte raw map. Exit ->
// ok, death by signal -> crash, timeout -> hang (process group killed).
#ifndef DARWINFUZZ_EXECUTOR_H_
#define DARWINFUZZ_EXECUTOR_H_

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "darwinfuzz/coverage.h"

namespace darwinfuzz {

enum class ExecStatus { kOk, kCrash, kHang };

std::string_view ExecStatusName(ExecStatus status);

struct ExecResult {
  ExecStatus status = ExecStatus::kOk;
  std::chrono::microseconds duration{0};
};

struct TargetSpec {
  enum class Kind { kBuiltin, kExternal };
  Kind kind = Kind::kBuiltin;
  std::string builtin;             // kBuiltin: "magicparse", "bitmaze", "null"
  std::vector<std::string> argv;   // kExternal: command with one "@@"
  std::chrono::milliseconds timeout{1000};
};

inline constexpr std::string_view kInputPlaceholder = "@@";
inline constexpr const char *kCoverageEnvVar = "COVERAGE_OUT";

// "builtin:<name>". External specs are built from the argv after `--`.
TargetSpec ParseBuiltinTarget(std::string_view spec);
TargetSpec ExternalTarget(std::vector<std::string> argv,
                          std::chrono::milliseconds timeout);

class Target {
 public:
  virtual ~Target() = default;
  // Clears and fills `map`.
  virtual ExecResult Run(std::span<const uint8_t> input, RawMap &map) = 0;
  virtual std::string name() const = 0;
};

// Throws StartupError for unknown builtins or a malformed external command.
std::unique_ptr<Target> MakeTarget(const TargetSpec &spec);

// --- builtin target definitions -------------------------------------------

// magicparse: edges 0..7 (map index = edge id), hit once each except e5.
//   e0 always
//   e1 len >= 4
//   e2 input[0..4] == "DRWN"
//   e3 e2 && len >= 6
//   e4 e3 && big-endian u16 at [4..6] == len - 6
//   e5 e4 && len - 6 >= 1; hit once per payload byte (payload = input[6..])
//   e6 e5 && XOR of payload bytes == 0
//   e7 e6 && payload contains 0xAA
//   crash iff e6 && payload starts with "BOOM"
inline constexpr std::string_view kMagicParseHeader = "DRWN";
inline constexpr std::string_view kMagicParseCrashPrefix = "BOOM";
inline constexpr uint8_t kMagicParseMarker = 0xAA;
inline constexpr size_t kMagicParseEdges = 8;
ExecStatus RunMagicParse(std::span<const uint8_t> input, RawMap &map);

// bitmaze: a ladder of 32 edges. With w the little-endian u32 at input[0..4]
// (len >= 4 required), edge k (map index k) is hit iff the k lowest bits of w
// equal those of kBitmazePattern. Edge 0 is therefore hit by every input of
// four or more bytes.
inline constexpr uint32_t kBitmazePattern = 0x9E3779B9u;
inline constexpr size_t kBitmazeEdges = 32;
ExecStatus RunBitmaze(std::span<const uint8_t> input, RawMap &map);

// null: no edges, always ok.
ExecStatus RunNull(std::span<const uint8_t> input, RawMap &map);

}  // namespace darwinfuzz

#endif  // DARWINFUZZ_EXECUTOR_H_
