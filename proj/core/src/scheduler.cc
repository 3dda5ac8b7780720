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

#include "darwinfuzz/scheduler.h"

#include <cmath>
#include <sstream>

#include "darwinfuzz/common.h"
#include "darwinfuzz/corpus.h"

namespace darwinfuzz {

std::string_view SchedulerKindName(SchedulerKind kind) {
  switch (kind) {
    case SchedulerKind::kUniform:
      return "uniform";
    case SchedulerKind::kStatic:
      return "static";
    case SchedulerKind::kDarwin:
      return "darwin";
  }
  return "unknown";
}

GenotypeSampler::GenotypeSampler(const Genotype &genotype) {
  if (const auto *mask = std::get_if<OperatorMask>(&genotype)) {
    for (size_t i = 0; i < kNumMutators; ++i)
      if ((*mask)[i]) enabled_.push_back(static_cast<MutatorId>(i));
    return;
  }
  weighted_ = true;
  const auto &w = std::get<OperatorWeights>(genotype);
  for (size_t i = 0; i < kNumMutators; ++i) {
    total_ += w[i];
    cumulative_[i] = total_;
    if (w[i] > 0) enabled_.push_back(static_cast<MutatorId>(i));
  }
}

MutatorId GenotypeSampler::Sample(Rng &rng) const {
  if (!weighted_) {
    return enabled_[rng.Below(static_cast<uint32_t>(enabled_.size()))];
  }
  const double u = rng.UnitDouble() * total_;
  for (size_t i = 0; i < kNumMutators; ++i) {
    if (u < cumulative_[i]) return static_cast<MutatorId>(i);
  }
  // u rounded up to total_.
  return enabled_.back();
}

Genotype ParseStaticDistribution(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<double> values;
  std::string token;
  while (in >> token) {
    double v = 0;
    size_t used = 0;
    try {
      v = std::stod(token, &used);
    } catch (const std::exception &) {
      used = 0;
    }
    if (used != token.size() || !std::isfinite(v)) {
      throw StartupError("static distribution: not a number: '" + token + "'");
    }
    if (v < 0) throw StartupError("static distribution: negative weight " + token);
    values.push_back(v);
  }
  if (values.size() != kNumMutators) {
    throw StartupError("static distribution: expected " +
                       std::to_string(kNumMutators) + " values, got " +
                       std::to_string(values.size()));
  }
  bool binary = true;
  bool any_positive = false;
  for (double v : values) {
    binary &= (v == 0.0 || v == 1.0);
    any_positive |= v > 0;
  }
  if (!any_positive) throw StartupError("static distribution: all weights are zero");
  if (binary) {
    OperatorMask mask;
    for (size_t i = 0; i < kNumMutators; ++i) mask[i] = values[i] == 1.0;
    return mask;
  }
  OperatorWeights w;
  std::copy(values.begin(), values.end(), w.begin());
  return w;
}

Genotype LoadStaticDistribution(const std::filesystem::path &path) {
  const ByteArray raw = ReadFileBytes(path);
  return ParseStaticDistribution(
      std::string_view(reinterpret_cast<const char *>(raw.data()), raw.size()));
}

std::string FormatStaticDistribution(const Genotype &genotype) {
  return FormatGenotype(genotype, ' ') + "\n";
}

StaticScheduler::StaticScheduler(Genotype distribution)
    : distribution_(std::move(distribution)), sampler_(distribution_) {}

DarwinScheduler::DarwinScheduler(const EsParams &params, uint64_t seed)
    : es_(params, seed) {}

MutatorId DarwinScheduler::Select(Rng &rng) {
  if (sampler_epoch_ != es_.epoch()) {
    sampler_ = GenotypeSampler(es_.active());
    sampler_epoch_ = es_.epoch();
  }
  return sampler_.Sample(rng);
}

void DarwinScheduler::Report(const Feedback &feedback) {
  auto record = es_.Report(feedback.new_path);
  if (record && observer_) observer_(*record);
}

SchedulerConfig ParseSchedulerSpec(std::string_view spec) {
  SchedulerConfig config;
  if (spec == "uniform") {
    config.kind = SchedulerKind::kUniform;
  } else if (spec == "darwin") {
    config.kind = SchedulerKind::kDarwin;
  } else if (spec.starts_with("static:") && spec.size() > 7) {
    config.kind = SchedulerKind::kStatic;
    config.static_path = std::string(spec.substr(7));
  } else {
    throw UsageError("--scheduler: expected uniform, darwin or static:<file>, got '" +
                     std::string(spec) + "'");
  }
  return config;
}

std::unique_ptr<Scheduler> MakeScheduler(const SchedulerConfig &config,
                                         Rng &rng) {
  switch (config.kind) {
    case SchedulerKind::kUniform:
      return std::make_unique<UniformScheduler>();
    case SchedulerKind::kStatic:
      return std::make_unique<StaticScheduler>(
          LoadStaticDistribution(config.static_path));
    case SchedulerKind::kDarwin:
      return std::make_unique<DarwinScheduler>(config.es, rng.NextU64());
  }
  throw StartupError("unknown scheduler kind");
}

}  // namespace darwinfuzz
