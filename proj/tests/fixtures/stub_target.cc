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

// Conforming external target used by the executor tests. Map byte i is input
// byte i. Inputs starting with a keyword misbehave on purpose:
//   CRASH  abort()            HANG   sleep forever
//   NOMAP  write no map       SHORT  write a 100-byte map
//   EXIT3  exit status 3 after writing the map
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iterator>
#include <string>
#include <vector>

int main(int argc, char **argv) {
  if (argc < 2) return 2;
  std::ifstream in(argv[1], std::ios::binary);
  std::vector<char> input((std::istreambuf_iterator<char>(in)),
                          std::istreambuf_iterator<char>());
  auto starts = [&](const char *kw) {
    const size_t n = std::strlen(kw);
    return input.size() >= n && std::memcmp(input.data(), kw, n) == 0;
  };
  if (starts("CRASH")) std::abort();
  if (starts("HANG")) {
    for (;;) pause();
  }
  if (starts("NOMAP")) return 0;
  const char *out = std::getenv("COVERAGE_OUT");
  if (!out) return 2;
  std::vector<char> map(65536, 0);
  for (size_t i = 0; i < input.size() && i < map.size(); ++i) map[i] = input[i];
  if (starts("SHORT")) map.resize(100);
  std::ofstream(out, std::ios::binary).write(map.data(), static_cast<std::streamsize>(map.size()));
  return starts("EXIT3") ? 3 : 0;
}
