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

// The campaign loop: cycle the queue, run the havoc stage on each entry with
// scheduler-driven operator selection, fall back to splicing after a cycle
// without finds, absorb coverage, feed the scheduler, admit new paths and
// record crashes. There is no deterministic stage and no per-entry energy:
// every entry gets the same number of havoc rounds.
#ifndef DARWINFUZZ_FUZZER_H_
#define DARWINFUZZ_FUZZER_H_

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <unordered_set>
#include <vector>

#include "darwinfuzz/common.h"
#include "darwinfuzz/corpus.h"
#include "darwinfuzz/coverage.h"
#include "darwinfuzz/executor.h"
#include "darwinfuzz/metrics.h"
#include "darwinfuzz/mutators.h"
#include "darwinfuzz/rng.h"
#include "darwinfuzz/scheduler.h"

namespace darwinfuzz {

struct CampaignConfig {
  uint64_t seed = 0;
  // Exactly one of the two budgets must be set. The exec budget counts
  // fuzzing executions only; seed priming is extra.
  std::optional<uint64_t> exec_budget;
  std::optional<std::chrono::milliseconds> duration;
  size_t havoc_rounds_per_entry = 256;
  SchedulerConfig scheduler;
  TargetSpec target;
  // Seeds come from input_dir when set, otherwise from inline_seeds.
  std::optional<std::filesystem::path> input_dir;
  std::vector<ByteArray> inline_seeds;
  // No files are written when unset.
  std::optional<std::filesystem::path> output_dir;
  std::optional<std::filesystem::path> dict_path;
  size_t max_input_len = kDefaultMaxInputLen;

  // Throws UsageError.
  void Validate() const;
};

inline constexpr int kSpliceAttempts = 16;
// Stats rows are emitted once per (virtual) second. In exec-budget mode one
// virtual second is this many fuzzing executions and elapsed_ms counts one
// millisecond per fuzzing execution.
inline constexpr uint64_t kExecsPerVirtualSecond = 1000;

inline constexpr std::string_view kEsLogHeader =
    "generation,parent_index,candidate_index,fitness,genotype";

class Campaign {
 public:
  // `target` and `scheduler` override the ones built from `config`.
  explicit Campaign(CampaignConfig config, std::unique_ptr<Target> target = nullptr,
                    std::unique_ptr<Scheduler> scheduler = nullptr);

  // Loads and primes seeds, then fuzzes until the budget is spent.
  CampaignStats Run();

  // One loop iteration: fuzz the next queue entry, then splice if that ended
  // a cycle without finds. Starts the campaign on first use. Returns false
  // once the budget is spent. Call Finish() afterwards.
  bool Step();

  // Individual stages, exposed for tests. Start() must run first.
  void Start();
  size_t FuzzEntry(const TestCase &entry);
  std::optional<ByteArray> SpliceStage();
  // Havoc rounds over `base`; returns the number of admitted finds.
  size_t FuzzBuffer(const ByteArray &base, const Provenance &provenance);
  void Finish();

  bool BudgetExhausted() const;

  const Queue &queue() const { return queue_; }
  const GlobalCoverage &coverage() const { return coverage_; }
  const CampaignStats &stats() const { return stats_; }
  Scheduler &scheduler() { return *scheduler_; }
  const CampaignConfig &config() const { return config_; }

 private:
  void ExecuteCandidate(const ByteArray &candidate, const Provenance &provenance,
                        size_t &finds);
  void MaybeEmitRow();
  void EmitRow();
  void WriteQueueFile(const TestCase &tc);

  CampaignConfig config_;
  Rng rng_;
  std::unique_ptr<Target> target_;
  std::unique_ptr<Scheduler> scheduler_;
  ExtrasDict extras_;
  Queue queue_;
  GlobalCoverage coverage_;
  CampaignStats stats_;
  std::unordered_set<uint64_t> crash_paths_;

  RawMap raw_;
  ClassifiedMap classified_;
  ByteArray scratch_;
  std::vector<MutatorId> used_;

  uint64_t fuzz_execs_ = 0;
  std::chrono::steady_clock::time_point fuzz_start_{};
  uint64_t next_row_at_ = 0;  // fuzz execs (virtual) or elapsed ms (wall)
  uint64_t last_row_execs_ = ~uint64_t{0};
  std::optional<StatsCsvWriter> stats_csv_;
  std::optional<std::ofstream> es_log_;
  bool started_ = false;
  bool finished_ = false;
};

CampaignStats RunCampaign(const CampaignConfig &config);

}  // namespace darwinfuzz

#endif  // DARWINFUZZ_FUZZER_H_
