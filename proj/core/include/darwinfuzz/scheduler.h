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

// Mutation schedulers. Every scheduler exposes the same three calls:
// construction (initialization), Select (pick the next mutator) and Report
// (per-execution feedback). Three kinds are provided:
//   uniform  every mutator with probability 1/17
//   static   a frozen distribution loaded from a file (0/1 mask or weights)
//   darwin   the distribution is the active candidate of an EvolutionStrategy
#ifndef DARWINFUZZ_SCHEDULER_H_
#define DARWINFUZZ_SCHEDULER_H_

#include <filesystem>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "darwinfuzz/coverage.h"
#include "darwinfuzz/es.h"
#include "darwinfuzz/mutators.h"
#include "darwinfuzz/rng.h"

namespace darwinfuzz {

enum class SchedulerKind { kUniform, kStatic, kDarwin };

std::string_view SchedulerKindName(SchedulerKind kind);

class Scheduler {
 public:
  virtual ~Scheduler() = default;
  virtual SchedulerKind kind() const = 0;
  virtual MutatorId Select(Rng &rng) = 0;
  virtual void Report(const Feedback &feedback) = 0;
};

// Draws from a fixed genotype. Masks: uniform over enabled ids, one R(k)
// draw. Weights: one UnitDouble() draw scaled by the total, inverted through
// the cumulative sums; zero weights are never returned.
class GenotypeSampler {
 public:
  GenotypeSampler() = default;
  explicit GenotypeSampler(const Genotype &genotype);

  MutatorId Sample(Rng &rng) const;

 private:
  bool weighted_ = false;
  std::vector<MutatorId> enabled_;
  std::array<double, kNumMutators> cumulative_{};
  double total_ = 0;
};

class UniformScheduler final : public Scheduler {
 public:
  SchedulerKind kind() const override { return SchedulerKind::kUniform; }
  MutatorId Select(Rng &rng) override {
    return static_cast<MutatorId>(rng.Below(kNumMutators));
  }
  void Report(const Feedback &) override {}
};

// One line of 17 whitespace-separated non-negative numbers. If every value is
// 0 or 1 the result is a mask, otherwise weights. Throws StartupError on bad
// numbers, wrong arity, negative values, or an all-zero distribution.
Genotype ParseStaticDistribution(std::string_view text);
Genotype LoadStaticDistribution(const std::filesystem::path &path);
// Inverse of ParseStaticDistribution (space separated, trailing newline).
std::string FormatStaticDistribution(const Genotype &genotype);

class StaticScheduler final : public Scheduler {
 public:
  explicit StaticScheduler(Genotype distribution);

  SchedulerKind kind() const override { return SchedulerKind::kStatic; }
  MutatorId Select(Rng &rng) override { return sampler_.Sample(rng); }
  void Report(const Feedback &) override {}

  const Genotype &distribution() const { return distribution_; }

 private:
  Genotype distribution_;
  GenotypeSampler sampler_;
};

class DarwinScheduler final : public Scheduler {
 public:
  using WindowObserver = std::function<void(const WindowRecord &)>;

  DarwinScheduler(const EsParams &params, uint64_t seed);

  SchedulerKind kind() const override { return SchedulerKind::kDarwin; }
  MutatorId Select(Rng &rng) override;
  // Adds feedback.new_path to the active candidate's window.
  void Report(const Feedback &feedback) override;

  void set_window_observer(WindowObserver observer) {
    observer_ = std::move(observer);
  }
  const EvolutionStrategy &es() const { return es_; }

 private:
  EvolutionStrategy es_;
  GenotypeSampler sampler_;
  uint64_t sampler_epoch_ = ~uint64_t{0};
  WindowObserver observer_;
};

struct SchedulerConfig {
  SchedulerKind kind = SchedulerKind::kUniform;
  std::filesystem::path static_path;  // kStatic only
  EsParams es;                        // kDarwin only
};

// Accepts "uniform", "darwin" or "static:<file>".
SchedulerConfig ParseSchedulerSpec(std::string_view spec);

// darwin seeds its own Rng from one draw of `rng`; the other kinds draw
// nothing.
std::unique_ptr<Scheduler> MakeScheduler(const SchedulerConfig &config,
                                         Rng &rng);

}  // namespace darwinfuzz

#endif  // DARWINFUZZ_SCHEDULER_H_
