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

// The fuzzing queue: seeds plus every input that produced a new path. Entries
// are append-only and visited cyclically; there is no culling or favoring.
#ifndef DARWINFUZZ_CORPUS_H_
#define DARWINFUZZ_CORPUS_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <vector>

#include "darwinfuzz/common.h"
#include "darwinfuzz/coverage.h"

namespace darwinfuzz {

struct TestCase {
  ByteArray data;
  uint64_t id = 0;
  std::optional<uint64_t> parent_id;
  uint64_t found_at_exec = 0;
  bool via_splice = false;
};

struct Provenance {
  std::optional<uint64_t> parent_id;
  uint64_t found_at_exec = 0;
  bool via_splice = false;
};

class Queue {
 public:
  explicit Queue(size_t max_len = kDefaultMaxInputLen) : max_len_(max_len) {}

  // Seeds are appended unconditionally. Throws StartupError when over the
  // length cap.
  const TestCase &AddSeed(ByteArray data);

  // Appends iff feedback.new_path. Oversized candidates are rejected and
  // counted in rejected_oversize().
  bool Admit(std::span<const uint8_t> candidate, const Feedback &feedback,
             const Provenance &provenance);

  // Returns the entry at the cursor and advances. The wrap back to entry 0
  // happens lazily on the call after the last entry was returned, so entries
  // admitted while the last entry is being fuzzed are still visited in the
  // current cycle. Wrapping bumps cycle_count and resets finds_this_cycle.
  // Requires a nonempty queue.
  const TestCase &NextEntry();

  // True once every entry of the current cycle has been handed out.
  bool AtCycleEnd() const { return cursor_ >= entries_.size(); }

  size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const TestCase &operator[](size_t i) const { return entries_[i]; }
  const std::vector<TestCase> &entries() const { return entries_; }
  size_t cursor() const { return cursor_; }
  uint64_t cycle_count() const { return cycle_count_; }
  uint64_t finds_this_cycle() const { return finds_this_cycle_; }
  uint64_t rejected_oversize() const { return rejected_oversize_; }
  size_t max_len() const { return max_len_; }

 private:
  size_t max_len_;
  std::vector<TestCase> entries_;
  size_t cursor_ = 0;
  uint64_t cycle_count_ = 0;
  uint64_t finds_this_cycle_ = 0;
  uint64_t rejected_oversize_ = 0;
};

// One TestCase per regular file, in bytewise filename order. Throws
// StartupError on a missing/empty directory, an unreadable file, or a file
// over `max_len`.
Queue LoadSeeds(const std::filesystem::path &dir,
                size_t max_len = kDefaultMaxInputLen);

ByteArray ReadFileBytes(const std::filesystem::path &path);
void WriteFileBytes(const std::filesystem::path &path,
                    std::span<const uint8_t> data);

}  // namespace darwinfuzz

#endif  // DARWINFUZZ_CORPUS_H_
