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
#include <string>

#include "darwinfuzz/common.h"
#include "darwinfuzz/coverage.h"
#include "darwinfuzz/executor.h"

namespace darwinfuzz {
namespace {

void RunBuiltin(benchmark::State &state, const std::string &name, ByteArray input) {
  const auto target = MakeTarget(ParseBuiltinTarget("builtin:" + name));
  auto map = std::make_unique<RawMap>();
  for (auto _ : state) benchmark::DoNotOptimize(target->Run(input, *map));
}

void BM_MagicParse(benchmark::State &state) {
  ByteArray input = {'D', 'R', 'W', 'N', 0xAA};
  input.resize(state.range(0), 0x41);
  RunBuiltin(state, "magicparse", std::move(input));
}
BENCHMARK(BM_MagicParse)->Arg(16)->Arg(1024);

void BM_Bitmaze(benchmark::State &state) {
  RunBuiltin(state, "bitmaze", ByteArray{0xB9, 0x79, 0x37, 0x9E});
}
BENCHMARK(BM_Bitmaze);

void BM_Null(benchmark::State &state) { RunBuiltin(state, "null", ByteArray(64)); }
BENCHMARK(BM_Null);

}  // namespace
}  // namespace darwinfuzz

BENCHMARK_MAIN();
