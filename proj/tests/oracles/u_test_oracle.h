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

// Exhaustive Mann-Whitney oracle. U is counted pairwise (a > b scores 1, ties
// 0.5) and labelings are enumerated recursively, independent of the midrank
// implementation.
#ifndef DARWINFUZZ_TESTS_ORACLES_U_TEST_ORACLE_H_
#define DARWINFUZZ_TESTS_ORACLES_U_TEST_ORACLE_H_

#include <cmath>
#include <cstddef>
#include <vector>

namespace darwinfuzz::oracle {

inline double PairwiseU(const std::vector<double> &a, const std::vector<double> &b) {
  double u = 0;
  for (double x : a)
    for (double y : b) u += x > y ? 1.0 : (x == y ? 0.5 : 0.0);
  return u;
}

struct OracleP {
  double u;
  double two_sided;
  double less;
  double greater;
};

inline OracleP EnumerateUTest(const std::vector<double> &a, const std::vector<double> &b) {
  std::vector<double> pooled = a;
  pooled.insert(pooled.end(), b.begin(), b.end());
  const size_t n = a.size();
  const double u_obs = PairwiseU(a, b);
  const double center = static_cast<double>(a.size() * b.size()) / 2;
  double total = 0, two = 0, less = 0, greater = 0;
  std::vector<bool> pick(pooled.size(), false);
  // Recursive choice of which pooled positions form the first sample.
  auto recurse = [&](auto &&self, size_t idx, size_t chosen) -> void {
    if (chosen == n) {
      std::vector<double> x, y;
      for (size_t i = 0; i < pooled.size(); ++i) (pick[i] ? x : y).push_back(pooled[i]);
      const double u = PairwiseU(x, y);
      total += 1;
      if (std::fabs(u - center) >= std::fabs(u_obs - center) - 1e-9) two += 1;
      if (u <= u_obs + 1e-9) less += 1;
      if (u >= u_obs - 1e-9) greater += 1;
      return;
    }
    if (idx == pooled.size()) return;
    if (pooled.size() - idx < n - chosen) return;
    pick[idx] = true;
    self(self, idx + 1, chosen + 1);
    pick[idx] = false;
    self(self, idx + 1, chosen);
  };
  recurse(recurse, 0, 0);
  return {u_obs, two / total, less / total, greater / total};
}

}  // namespace darwinfuzz::oracle

#endif  // DARWINFUZZ_TESTS_ORACLES_U_TEST_ORACLE_H_
