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

// Multi-parent (mu + lambda) Evolution Strategy over mutation-operator
// distributions.
//
// The mu searches are independent and run interleaved, one generation at a
// time, round-robin. A generation of parent p evaluates 1 + lambda candidates
// in order: the parent itself (re-evaluated, since new-path fitness is not
// stationary), then lambda children, each a single perturbation of the parent
// taken at generation start. Every candidate drives mutator selection for a
// window of `window` executions and scores the number of new unique paths
// found in that window. The best candidate becomes the parent; on equal
// fitness the later-evaluated candidate wins, so offspring beat the parent.
#ifndef DARWINFUZZ_ES_H_
#define DARWINFUZZ_ES_H_

#include <bitset>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "darwinfuzz/mutators.h"
#include "darwinfuzz/rng.h"

namespace darwinfuzz {

enum class Encoding { kBinary, kReal };

inline constexpr double kWeightFloor = 1e-6;
inline constexpr double kPerturbSigma = 0.25;

// Bit i enables mutator i; never all-zero.
using OperatorMask = std::bitset<kNumMutators>;
// Relative selection weights; every entry >= kWeightFloor, may exceed 1.
using OperatorWeights = std::array<double, kNumMutators>;
using Genotype = std::variant<OperatorMask, OperatorWeights>;

struct Solution {
  Genotype genotype;
  uint64_t fitness = 0;
  bool evaluated = false;
};

// One uniformly chosen flag is inverted (idx = R(17)). If that empties the
// mask, a uniformly chosen flag (R(17)) is switched on.
OperatorMask PerturbBinary(const OperatorMask &mask, Rng &rng);

// idx = R(17), then weights[idx] += 0.25 * Gaussian(), floored.
OperatorWeights PerturbReal(const OperatorWeights &weights, Rng &rng);

Genotype Perturb(const Genotype &genotype, Rng &rng);

// Binary: parent 0 all ones, the rest Bernoulli(1/2) per flag (R(2) each,
// resampled when empty). Real: every weight UnitDouble(), floored.
std::vector<Solution> InitParents(size_t mu, Encoding encoding, Rng &rng);

bool SatisfiesEncoding(const Genotype &genotype);

// Values joined with `sep`: 0/1 for masks, shortest round-trip decimals for
// weights.
std::string FormatGenotype(const Genotype &genotype, char sep);

struct EsParams {
  size_t mu = 5;
  size_t lambda = 4;
  size_t window = 512;
  Encoding encoding = Encoding::kBinary;
};

// A finished evaluation window, as logged to es_log.csv.
struct WindowRecord {
  uint64_t generation = 0;  // generation index of `parent_index`
  size_t parent_index = 0;
  size_t candidate_index = 0;  // 0 = parent, 1..lambda = children
  uint64_t fitness = 0;
  Genotype genotype;
};

struct BestParent {
  Solution solution;
  size_t index = 0;
  bool evaluated = false;  // false when no generation has completed yet
};

class EvolutionStrategy {
 public:
  // Throws StartupError when mu, lambda or window is zero.
  EvolutionStrategy(const EsParams &params, uint64_t seed);

  const Genotype &active() const { return pending_[active_].genotype; }

  // Credits one execution to the active candidate. Returns the finished
  // window when this call exhausts it.
  std::optional<WindowRecord> Report(bool new_path);

  // Closes the active candidate's window with `fitness` and moves to the next
  // candidate (or the next parent's generation). Returns the new active
  // genotype.
  const Genotype &Advance(uint64_t fitness);

  // Highest latest-generation fitness among evaluated parents, ties to the
  // lowest index.
  BestParent Best() const;

  const EsParams &params() const { return params_; }
  const std::vector<Solution> &parents() const { return parents_; }
  const std::vector<Solution> &candidates() const { return pending_; }
  size_t cursor() const { return cursor_; }
  size_t active_index() const { return active_; }
  size_t window_used() const { return window_used_; }
  uint64_t window_fitness() const { return window_fitness_; }
  const std::vector<uint64_t> &generations() const { return generations_; }
  // Index into candidates() that won the most recent completed generation.
  std::optional<size_t> last_winner() const { return last_winner_; }
  // Changes whenever active() changes.
  uint64_t epoch() const { return epoch_; }

 private:
  void StartGeneration(size_t parent);

  EsParams params_;
  Rng rng_;
  std::vector<Solution> parents_;
  std::vector<uint64_t> generations_;
  std::vector<Solution> pending_;
  size_t cursor_ = 0;
  size_t active_ = 0;
  size_t window_used_ = 0;
  uint64_t window_fitness_ = 0;
  std::optional<size_t> last_winner_;
  uint64_t epoch_ = 0;
};

}  // namespace darwinfuzz

#endif  // DARWINFUZZ_ES_H_
