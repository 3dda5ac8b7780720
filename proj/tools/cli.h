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

// Command-line parsing for the darwinfuzz tool: `run`, `compare`, `bench`.
#ifndef DARWINFUZZ_TOOLS_CLI_H_
#define DARWINFUZZ_TOOLS_CLI_H_

#include <chrono>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bench.h"
#include "darwinfuzz/fuzzer.h"

namespace darwinfuzz::cli {

struct RunCommand {
  CampaignConfig config;
  bool seed_from_clock = false;
};

struct CompareCommand {
  std::vector<std::filesystem::path> a;
  std::vector<std::filesystem::path> b;
};

struct BenchCommand {
  BenchPlan plan;
  std::filesystem::path output_dir;
};

// Thrown for --help; what() is the help text.
class HelpRequested : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Command = std::variant<RunCommand, CompareCommand, BenchCommand>;

// Throws UsageError (naming the offending flag) or HelpRequested.
Command ParseArgs(const std::vector<std::string> &args);

// "300s", "5m", "2h", "250ms" or a bare number of seconds.
std::chrono::milliseconds ParseDuration(std::string_view text);

// Prints per-run final unique_paths, medians, U and p for two groups of
// stats.csv files.
void RunCompare(const CompareCommand &command, std::ostream &out);

}  // namespace darwinfuzz::cli

#endif  // DARWINFUZZ_TOOLS_CLI_H_
