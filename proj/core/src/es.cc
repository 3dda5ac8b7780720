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

#include "darwinfuzz/es.h"

#include <algorithm>
#include <charconv>

#include "darwinfuzz/common.h"

namespace darwinfuzz {

OperatorMask PerturbBinary(const OperatorMask &mask, Rng &rng) {
  OperatorMask out = mask;
  out.flip(rng.Below(kNumMutators));
  if (out.none()) out.set(rng.Below(kNumMutators));
  return out;
}

OperatorWeights PerturbReal(const OperatorWeights &weights, Rng &rng) {
  OperatorWeights out = weights;
  const size_t idx = rng.Below(kNumMutators);
  out[idx] = std::max(kWeightFloor, out[idx] + kPerturbSigma * rng.Gaussian());
  return out;
}

Genotype Perturb(const Genotype &genotype, Rng &rng) {
  if (const auto *mask = std::get_if<OperatorMask>(&genotype))
    return PerturbBinary(*mask, rng);
  return PerturbReal(std::get<OperatorWeights>(genotype), rng);
}

std::vector<Solution> InitParents(size_t mu, Encoding encoding, Rng &rng) {
  std::vector<Solution> parents(mu);
  for (size_t p = 0; p < mu; ++p) {
    if (encoding == Encoding::kReal) {
      OperatorWeights w;
      for (double &x : w) x = std::max(kWeightFloor, rng.UnitDouble());
      parents[p].genotype = w;
      continue;
    }
    OperatorMask mask;
    if (p == 0) {
      mask.set();
    } else {
      do {
        for (size_t i = 0; i < kNumMutators; ++i) mask[i] = rng.Below(2) != 0;
      } while (mask.none());
    }
    parents[p].genotype = mask;
  }
  return parents;
}

bool SatisfiesEncoding(const Genotype &genotype) {
  if (const auto *mask = std::get_if<OperatorMask>(&genotype))
    return mask->any();
  const auto &w = std::get<OperatorWeights>(genotype);
  return std::all_of(w.begin(), w.end(),
                     [](double x) { return x >= kWeightFloor; });
}

std::string FormatGenotype(const Genotype &genotype, char sep) {
  std::string out;
  for (size_t i = 0; i < kNumMutators; ++i) {
    if (i) out.push_back(sep);
    if (const auto *mask = std::get_if<OperatorMask>(&genotype)) {
      out.push_back((*mask)[i] ? '1' : '0');
    } else {
      char buf[32];
      auto res = std::to_chars(buf, buf + sizeof(buf),
                               std::get<OperatorWeights>(genotype)[i]);
      out.append(buf, res.ptr);
    }
  }
  return out;
}

EvolutionStrategy::EvolutionStrategy(const EsParams &params, uint64_t seed)
    : params_(params), rng_(seed) {
  if (params.mu == 0 || params.lambda == 0 || params.window == 0) {
    throw StartupError("mu, lambda and window must all be >= 1");
  }
  parents_ = InitParents(params.mu, params.encoding, rng_);
  generations_.assign(params.mu, 0);
  StartGeneration(0);
}

void EvolutionStrategy::StartGeneration(size_t parent) {
  cursor_ = parent;
  pending_.clear();
  pending_.reserve(1 + params_.lambda);
  pending_.push_back(Solution{parents_[parent].genotype, 0, false});
  for (size_t c = 0; c < params_.lambda; ++c) {
    pending_.push_back(Solution{Perturb(parents_[parent].genotype, rng_), 0, false});
  }
  active_ = 0;
  window_used_ = 0;
  window_fitness_ = 0;
  ++epoch_;
}

std::optional<WindowRecord> EvolutionStrategy::Report(bool new_path) {
  window_fitness_ += new_path ? 1 : 0;
  if (++window_used_ < params_.window) return std::nullopt;
  WindowRecord record{generations_[cursor_], cursor_, active_, window_fitness_,
                      pending_[active_].genotype};
  Advance(window_fitness_);
  return record;
}

const Genotype &EvolutionStrategy::Advance(uint64_t fitness) {
  pending_[active_].fitness = fitness;
  pending_[active_].evaluated = true;
  if (active_ + 1 < pending_.size()) {
    ++active_;
    window_used_ = 0;
    window_fitness_ = 0;
    ++epoch_;
    return active();
  }
  size_t winner = 0;
  for (size_t i = 1; i < pending_.size(); ++i) {
    if (pending_[i].fitness >= pending_[winner].fitness) winner = i;
  }
  last_winner_ = winner;
  parents_[cursor_] = pending_[winner];
  ++generations_[cursor_];
  StartGeneration((cursor_ + 1) % params_.mu);
  return active();
}

BestParent EvolutionStrategy::Best() const {
  BestParent best{parents_[0], 0, false};
  for (size_t p = 0; p < parents_.size(); ++p) {
    if (!parents_[p].evaluated) continue;
    if (!best.evaluated || parents_[p].fitness > best.solution.fitness) {
      best = BestParent{parents_[p], p, true};
    }
  }
  return best;
}

}  // namespace darwinfuzz
