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

#include <cstdint>

#include "darwinfuzz/common.h"
#include "darwinfuzz/mutators.h"
#include "darwinfuzz/rng.h"
#include "darwinfuzz/scheduler.h"

namespace darwinfuzz {
namespace {

ByteArray RandomBytes(size_t len, Rng &rng) {
  ByteArray out(len);
  for (auto &b : out) b = static_cast<uint8_t>(rng.Below(256));
  return out;
}

void BM_ApplyInPlace(benchmark::State &state) {
  const auto id = static_cast<MutatorId>(state.range(0));
  Rng rng(1);
  const ExtrasDict extras = {ByteArray{'D', 'R', 'W', 'N'}};
  const ByteArray base = RandomBytes(256, rng);
  ByteArray data = base;
  for (auto _ : state) {
    ApplyInPlace(id, data, rng, extras, 4096);
    if (data.size() > 1024 || data.size() < 16) data = base;
    benchmark::DoNotOptimize(data.data());
  }
  state.SetLabel(std::string(MutatorName(id)));
}
BENCHMARK(BM_ApplyInPlace)->DenseRange(0, kNumMutators - 1);

void BM_HavocInPlace(benchmark::State &state) {
  Rng rng(2);
  UniformScheduler scheduler;
  const ByteArray base = RandomBytes(state.range(0), rng);
  ByteArray data;
  std::vector<MutatorId> used;
  for (auto _ : state) {
    data = base;
    HavocInPlace(data, rng, scheduler, {}, kDefaultMaxInputLen, used);
    benchmark::DoNotOptimize(data.data());
  }
}
BENCHMARK(BM_HavocInPlace)->Arg(16)->Arg(256)->Arg(4096);

void BM_Splice(benchmark::State &state) {
  Rng rng(3);
  const ByteArray a = RandomBytes(state.range(0), rng);
  const ByteArray b = RandomBytes(state.range(0), rng);
  for (auto _ : state) benchmark::DoNotOptimize(Splice(a, b, rng));
}
BENCHMARK(BM_Splice)->Arg(64)->Arg(1024);

}  // namespace
}  // namespace darwinfuzz

BENCHMARK_MAIN();
