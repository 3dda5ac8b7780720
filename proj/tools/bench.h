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

// Repetition matrices for scheduler A/B studies: every (target, scheduler)
// cell is run `runs` times with seeds base_seed + r.
#ifndef DARWINFUZZ_TOOLS_BENCH_H_
#define DARWINFUZZ_TOOLS_BENCH_H_

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "darwinfuzz/fuzzer.h"

namespace darwinfuzz::cli {

// Plan files are line oriented `key = value`, `#` starts a comment:
//   targets      comma list of builtin:<name>            (required)
//   schedulers   comma list of uniform|darwin|static:<f> (required)
//   runs         runs per cell, default 10
//   execs        per-run exec budget  } exactly one
//   duration     per-run duration     }
//   base_seed    default 1
//   seeds        seed directory; default is one empty input
//   dict         dictionary file
//   encoding     binary|real (darwin), default binary
//   mu, lambda, window, havoc_rounds, timeout_ms
//   jobs         concurrent runs, default 1
// Relative paths resolve against the plan file's directory.
struct BenchPlan {
  std::vector<std::string> targets;
  std::vector<std::string> schedulers;
  size_t runs = 10;
  std::optional<uint64_t> execs;
  std::optional<std::chrono::milliseconds> duration;
  uint64_t base_seed = 1;
  std::optional<std::filesystem::path> seeds_dir;
  std::optional<std::filesystem::path> dict;
  EsParams es;
  size_t havoc_rounds = 256;
  std::chrono::milliseconds timeout{1000};
  size_t jobs = 1;
};

// Throws UsageError.
BenchPlan ParseBenchPlan(std::string_view text,
                         const std::filesystem::path &base_dir = {});
BenchPlan LoadBenchPlan(const std::filesystem::path &path);

struct RunSummary {
  uint64_t unique_paths = 0;
  uint64_t edges_covered = 0;
  std::optional<double> effectiveness;
  uint64_t execs = 0;
  double execs_per_sec = 0;
};

struct CellSummary {
  std::string target;
  std::string scheduler;
  std::vector<RunSummary> runs;
  double median_unique_paths = 0;
  double mean_unique_paths = 0;
  double median_edges = 0;
  double mean_edges = 0;
  std::optional<double> median_effectiveness;
  // Two-sided Mann-Whitney p of final unique_paths against the first
  // scheduler on the same target; absent for that scheduler and with < 2 runs.
  std::optional<double> u_vs_first;
  std::optional<double> p_vs_first;
};

inline constexpr std::string_view kSummaryCsvHeader =
    "target,scheduler,runs,median_unique_paths,mean_unique_paths,median_edges,"
    "mean_edges,median_effectiveness,u_vs_first,p_vs_first";

// Config of run `run` of cell (target, scheduler); output_dir unset.
CampaignConfig MakeRunConfig(const BenchPlan &plan, const std::string &target,
                             const std::string &scheduler, size_t run);

// Runs every cell, writing <out>/<t>_<target>/<s>_<scheduler>/run_<r>/ and
// <out>/summary.csv.
std::vector<CellSummary> RunBench(const BenchPlan &plan,
                                  const std::filesystem::path &output_dir);

double Median(std::vector<double> values);

}  // namespace darwinfuzz::cli

#endif  // DARWINFUZZ_TOOLS_BENCH_H_
