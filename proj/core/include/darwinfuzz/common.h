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

#ifndef DARWINFUZZ_COMMON_H_
#define DARWINFUZZ_COMMON_H_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace darwinfuzz {

using ByteArray = std::vector<uint8_t>;

// Default cap on input length, shared by the corpus and the mutators.
inline constexpr size_t kDefaultMaxInputLen = 1 << 20;

// Bad configuration detected before or while starting a campaign (unreadable
// seeds, malformed distribution files, target launch failure).
class StartupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad command line.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace darwinfuzz

#endif  // DARWINFUZZ_COMMON_H_
