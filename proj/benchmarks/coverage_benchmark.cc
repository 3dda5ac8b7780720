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
#include "darwinfuzz/rng.h"

namespace darwinfuzz {
namespace {

// A raw map with `range(0)` nonzero counters.
std::unique_ptr<RawMap> SparseMap(size_t hits, Rng &rng) {
  auto map = std::make_unique<RawMap>();
  for (size_t i = 0; i < hits; ++i) map->Hit(rng.Below(kMapSize), 1 + rng.Below(200));
  return map;
}

void BM_ClassifyMap(benchmark::State &state) {
  Rng rng(1);
  const auto raw = SparseMap(state.range(0), rng);
  auto out = std::make_unique<ClassifiedMap>();
  for (auto _ : state) {
    ClassifyMap(*raw, *out);
    benchmark::DoNotOptimize(out->buckets.data());
  }
}
BENCHMARK(BM_ClassifyMap)->Arg(8)->Arg(1024)->Arg(16384);

void BM_PathId(benchmark::State &state) {
  Rng rng(2);
  const auto raw = SparseMap(state.range(0), rng);
  auto map = std::make_unique<ClassifiedMap>();
  ClassifyMap(*raw, *map);
  for (auto _ : state) benchmark::DoNotOptimize(PathId(*map));
}
BENCHMARK(BM_PathId)->Arg(8)->Arg(1024)->Arg(16384);

void BM_AbsorbKnownPath(benchmark::State &state) {
  Rng rng(3);
  const auto raw = SparseMap(state.range(0), rng);
  auto map = std::make_unique<ClassifiedMap>();
  ClassifyMap(*raw, *map);
  GlobalCoverage global;
  global.Absorb(*map);
  for (auto _ : state) benchmark::DoNotOptimize(global.Absorb(*map));
}
BENCHMARK(BM_AbsorbKnownPath)->Arg(8)->Arg(1024);

}  // namespace
}  // namespace darwinfuzz

BENCHMARK_MAIN();
