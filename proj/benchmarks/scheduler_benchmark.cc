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

#include <benchmark/benchmark.h>

#include <memory>

#include "darwinfuzz/coverage.h"
#include "darwinfuzz/es.h"
#include "darwinfuzz/rng.h"
#include "darwinfuzz/scheduler.h"

namespace darwinfuzz {
namespace {

void BM_UniformSelect(benchmark::State &state) {
  Rng rng(1);
  UniformScheduler scheduler;
  for (auto _ : state) benchmark::DoNotOptimize(scheduler.Select(rng));
}
BENCHMARK(BM_UniformSelect);

void BM_StaticMaskSelect(benchmark::State &state) {
  Rng rng(2);
  OperatorMask mask;
  for (size_t i = 0; i < kNumMutators; i += 3) mask.set(i);
  StaticScheduler scheduler(mask);
  for (auto _ : state) benchmark::DoNotOptimize(scheduler.Select(rng));
}
BENCHMARK(BM_StaticMaskSelect);

void BM_StaticWeightsSelect(benchmark::State &state) {
  Rng rng(3);
  OperatorWeights weights;
  for (size_t i = 0; i < kNumMutators; ++i) weights[i] = 0.1 + i;
  StaticScheduler scheduler(weights);
  for (auto _ : state) benchmark::DoNotOptimize(scheduler.Select(rng));
}
BENCHMARK(BM_StaticWeightsSelect);

// One Select and one Report per iteration, the per-exec cost in a campaign.
void BM_DarwinSelectReport(benchmark::State &state) {
  Rng rng(4);
  EsParams params;
  params.window = state.range(0);
  params.encoding = state.range(1) ? Encoding::kReal : Encoding::kBinary;
  DarwinScheduler scheduler(params, 5);
  Feedback found;
  found.new_path = true;
  const Feedback nothing;
  uint64_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(scheduler.Select(rng));
    scheduler.Report(++i % 97 == 0 ? found : nothing);
  }
}
BENCHMARK(BM_DarwinSelectReport)->Args({512, 0})->Args({512, 1})->Args({16, 0})->Args({16, 1});

}  // namespace
}  // namespace darwinfuzz

BENCHMARK_MAIN();
