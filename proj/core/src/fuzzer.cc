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

#include "darwinfuzz/fuzzer.h"

#include <string>

namespace darwinfuzz {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

void CampaignConfig::Validate() const {
  if (exec_budget.has_value() == duration.has_value()) {
    throw UsageError("exactly one of --execs or --duration is required");
  }
  if (exec_budget && *exec_budget == 0) throw UsageError("--execs must be positive");
  if (duration && duration->count() <= 0) throw UsageError("--duration must be positive");
  if (havoc_rounds_per_entry == 0) throw UsageError("--havoc-rounds must be >= 1");
  if (max_input_len == 0) throw UsageError("max input length must be positive");
  if (scheduler.kind == SchedulerKind::kDarwin &&
      (scheduler.es.mu == 0 || scheduler.es.lambda == 0 || scheduler.es.window == 0)) {
    throw UsageError("--mu, --lambda and --window must be >= 1");
  }
  if (!input_dir && inline_seeds.empty()) throw UsageError("no seeds given");
}

Campaign::Campaign(CampaignConfig config, std::unique_ptr<Target> target,
                   std::unique_ptr<Scheduler> scheduler)
    : config_(std::move(config)),
      rng_(config_.seed),
      target_(std::move(target)),
      scheduler_(std::move(scheduler)),
      queue_(config_.max_input_len) {}

bool Campaign::BudgetExhausted() const {
  if (config_.exec_budget) return fuzz_execs_ >= *config_.exec_budget;
  return Clock::now() - fuzz_start_ >= *config_.duration;
}

void Campaign::Start() {
  config_.Validate();
  if (config_.input_dir) {
    queue_ = LoadSeeds(*config_.input_dir, config_.max_input_len);
  } else {
    for (const auto &seed : config_.inline_seeds) queue_.AddSeed(seed);
  }
  if (config_.dict_path) extras_ = LoadDictionary(*config_.dict_path);
  if (!target_) target_ = MakeTarget(config_.target);
  if (!scheduler_) scheduler_ = MakeScheduler(config_.scheduler, rng_);

  if (config_.output_dir) {
    const fs::path &out = *config_.output_dir;
    fs::create_directories(out / "queue");
    fs::create_directories(out / "crashes");
    stats_csv_.emplace(out / "stats.csv");
    if (auto *darwin = dynamic_cast<DarwinScheduler *>(scheduler_.get())) {
      es_log_.emplace(out / "es_log.csv", std::ios::trunc);
      if (!*es_log_) throw StartupError("cannot open es_log.csv");
      *es_log_ << kEsLogHeader << '\n';
      darwin->set_window_observer([this](const WindowRecord &r) {
        *es_log_ << r.generation << ',' << r.parent_index << ','
                 << r.candidate_index << ',' << r.fitness << ','
                 << FormatGenotype(r.genotype, ';') << '\n';
      });
    }
  }

  stats_.start_time = Clock::now();
  // Prime: every seed runs once so its path counts as known.
  for (const TestCase &seed : queue_.entries()) {
    const ExecResult result = target_->Run(seed.data, raw_);
    ++stats_.execs;
    ClassifyMap(raw_, classified_);
    coverage_.Absorb(classified_);
    if (result.status == ExecStatus::kCrash &&
        crash_paths_.insert(PathId(classified_)).second) {
      ++stats_.crashes;
    }
    WriteQueueFile(seed);
  }
  stats_.unique_paths = coverage_.unique_paths();
  stats_.edges_covered = coverage_.edges_covered();
  stats_.seed_paths = stats_.unique_paths;

  fuzz_start_ = Clock::now();
  next_row_at_ = config_.exec_budget ? kExecsPerVirtualSecond : 1000;
  EmitRow();
  started_ = true;
}

void Campaign::WriteQueueFile(const TestCase &tc) {
  if (!config_.output_dir) return;
  WriteFileBytes(*config_.output_dir / "queue" / ("id_" + std::to_string(tc.id)),
                 tc.data);
}

void Campaign::EmitRow() {
  if (stats_.execs == last_row_execs_) return;
  last_row_execs_ = stats_.execs;
  if (!stats_csv_) return;
  if (config_.exec_budget) {
    stats_csv_->Append(MakeStatsRow(stats_, fuzz_execs_, std::nullopt));
  } else {
    const double elapsed =
        std::chrono::duration<double>(Clock::now() - fuzz_start_).count();
    stats_csv_->Append(MakeStatsRow(stats_, static_cast<uint64_t>(elapsed * 1000),
                                    ExecsPerSecond(stats_.execs, elapsed)));
  }
  stats_csv_->Flush();
}

void Campaign::MaybeEmitRow() {
  if (config_.exec_budget) {
    if (fuzz_execs_ < next_row_at_) return;
    next_row_at_ += kExecsPerVirtualSecond;
    EmitRow();
    return;
  }
  const auto elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                              Clock::now() - fuzz_start_)
                              .count();
  if (static_cast<uint64_t>(elapsed_ms) < next_row_at_) return;
  next_row_at_ = (static_cast<uint64_t>(elapsed_ms) / 1000 + 1) * 1000;
  EmitRow();
}

void Campaign::ExecuteCandidate(const ByteArray &candidate,
                                const Provenance &provenance, size_t &finds) {
  const ExecResult result = target_->Run(candidate, raw_);
  ++stats_.execs;
  ++fuzz_execs_;
  Feedback feedback;
  switch (result.status) {
    case ExecStatus::kCrash: {
      // Crashes are deduplicated by path but never enqueued.
      ClassifyMap(raw_, classified_);
      if (crash_paths_.insert(PathId(classified_)).second) {
        if (config_.output_dir) {
          WriteFileBytes(*config_.output_dir / "crashes" /
                             ("id_" + std::to_string(stats_.crashes)),
                         candidate);
        }
        ++stats_.crashes;
      }
      break;
    }
    case ExecStatus::kHang:
      ++stats_.hangs;
      break;
    case ExecStatus::kOk:
      ClassifyMap(raw_, classified_);
      feedback = coverage_.Absorb(classified_);
      break;
  }
  scheduler_->Report(feedback);
  if (feedback.new_path) {
    stats_.unique_paths = coverage_.unique_paths();
    stats_.edges_covered = coverage_.edges_covered();
    stats_.coverage_events.push_back(
        CoverageEvent{stats_.execs, stats_.mutations, stats_.edges_covered});
    Provenance p = provenance;
    p.found_at_exec = stats_.execs;
    if (queue_.Admit(candidate, feedback, p)) {
      ++finds;
      WriteQueueFile(queue_.entries().back());
    }
  }
  MaybeEmitRow();
}

size_t Campaign::FuzzBuffer(const ByteArray &base, const Provenance &provenance) {
  size_t finds = 0;
  for (size_t round = 0; round < config_.havoc_rounds_per_entry; ++round) {
    if (BudgetExhausted()) break;
    scratch_ = base;
    stats_.mutations += HavocInPlace(scratch_, rng_, *scheduler_, extras_,
                                     config_.max_input_len, used_);
    for (MutatorId id : used_) ++stats_.operator_selections[id];
    ExecuteCandidate(scratch_, provenance, finds);
  }
  return finds;
}

size_t Campaign::FuzzEntry(const TestCase &entry) {
  // Copy: admissions may reallocate the queue storage `entry` lives in.
  const ByteArray base = entry.data;
  return FuzzBuffer(base, Provenance{entry.id, 0, false});
}

std::optional<ByteArray> Campaign::SpliceStage() {
  const size_t n = queue_.size();
  if (n < 2) return std::nullopt;
  for (int attempt = 0; attempt < kSpliceAttempts; ++attempt) {
    const size_t i = rng_.Below(static_cast<uint32_t>(n));
    size_t j = rng_.Below(static_cast<uint32_t>(n - 1));
    if (j >= i) ++j;
    if (auto spliced = Splice(queue_[i].data, queue_[j].data, rng_)) {
      ++stats_.splice_rounds;
      return spliced;
    }
  }
  return std::nullopt;
}

void Campaign::Finish() {
  if (finished_) return;
  finished_ = true;
  EmitRow();
  stats_.wall_seconds =
      std::chrono::duration<double>(Clock::now() - stats_.start_time).count();
  if (es_log_) es_log_->flush();
  if (config_.output_dir) {
    if (auto *darwin = dynamic_cast<DarwinScheduler *>(scheduler_.get())) {
      std::ofstream out(*config_.output_dir / "best_distribution.txt", std::ios::trunc);
      out << FormatStaticDistribution(darwin->es().Best().solution.genotype);
      if (!out) throw std::runtime_error("cannot write best_distribution.txt");
    }
  }
}

bool Campaign::Step() {
  if (!started_) Start();
  if (BudgetExhausted()) return false;
  const TestCase &entry = queue_.NextEntry();
  FuzzEntry(entry);
  if (queue_.AtCycleEnd() && queue_.finds_this_cycle() == 0 && !BudgetExhausted()) {
    if (auto spliced = SpliceStage()) {
      FuzzBuffer(*spliced, Provenance{std::nullopt, 0, true});
    }
  }
  return !BudgetExhausted();
}

CampaignStats Campaign::Run() {
  while (Step()) {
  }
  Finish();
  return stats_;
}

CampaignStats RunCampaign(const CampaignConfig &config) {
  Campaign campaign(config);
  return campaign.Run();
}

}  // namespace darwinfuzz
