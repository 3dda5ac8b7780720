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

#include <vector>

#include "darwinfuzz/common.h"
#include "gtest/gtest.h"

namespace darwinfuzz {
namespace {

EsParams Params(size_t mu, size_t lambda, size_t window = 1) {
  EsParams p;
  p.mu = mu;
  p.lambda = lambda;
  p.window = window;
  return p;
}

// Feeds one generation of fitness values to the active parent's search and
// returns the candidates that were evaluated.
std::vector<Solution> RunGeneration(EvolutionStrategy &es,
                                    const std::vector<uint64_t> &fitness) {
  std::vector<Solution> cands = es.candidates();
  for (uint64_t f : fitness) es.Advance(f);
  return cands;
}

TEST(InitParentsTest, BinaryParentZeroIsAllOnes) {
  Rng rng(1);
  const auto parents = InitParents(5, Encoding::kBinary, rng);
  ASSERT_EQ(parents.size(), 5u);
  EXPECT_TRUE(std::get<OperatorMask>(parents[0].genotype).all());
  for (const auto &p : parents) EXPECT_TRUE(SatisfiesEncoding(p.genotype));
}

TEST(InitParentsTest, SingleParent) {
  Rng rng(1);
  const auto parents = InitParents(1, Encoding::kBinary, rng);
  ASSERT_EQ(parents.size(), 1u);
  EXPECT_TRUE(std::get<OperatorMask>(parents[0].genotype).all());
}

TEST(InitParentsTest, RealWeightsInRange) {
  Rng rng(2);
  for (const auto &p : InitParents(50, Encoding::kReal, rng)) {
    for (double w : std::get<OperatorWeights>(p.genotype)) {
      EXPECT_GE(w, kWeightFloor);
      EXPECT_LE(w, 1.0);
    }
  }
}

TEST(PerturbBinaryTest, FlipsOneFlag) {
  Rng rng(3);
  OperatorMask mask;
  mask.set(0);
  mask.set(2);
  for (int i = 0; i < 1000; ++i) {
    Rng probe = rng;
    const size_t idx = probe.Below(kNumMutators);
    const OperatorMask out = PerturbBinary(mask, rng);
    const OperatorMask diff = out ^ mask;
    if (mask.count() == 1 && mask[idx]) {
      EXPECT_EQ(out.count(), 1u);
    } else {
      EXPECT_EQ(diff.count(), 1u);
      EXPECT_TRUE(diff[idx]);
    }
    mask = out;
  }
}

TEST(PerturbBinaryTest, GuardKeepsOneFlag) {
  OperatorMask single;
  single.set(0);
  Rng rng = [] {
    for (uint64_t s = 1;; ++s) {
      Rng probe(s);
      if (probe.Below(kNumMutators) == 0) return Rng(s);
    }
  }();
  const OperatorMask out = PerturbBinary(single, rng);
  EXPECT_EQ(out.count(), 1u);
}

TEST(PerturbRealTest, OneCoordinateMovesByScaledGaussian) {
  OperatorWeights w;
  w.fill(0.5);
  for (uint64_t seed = 1; seed < 300; ++seed) {
    Rng rng(seed), probe(seed);
    const size_t idx = probe.Below(kNumMutators);
    const double g = probe.Gaussian();
    const OperatorWeights out = PerturbReal(w, rng);
    for (size_t i = 0; i < kNumMutators; ++i) {
      if (i == idx)
        EXPECT_DOUBLE_EQ(out[i], std::max(kWeightFloor, 0.5 + 0.25 * g));
      else
        EXPECT_EQ(out[i], 0.5);
    }
  }
}

TEST(PerturbRealTest, FloorApplies) {
  OperatorWeights w;
  w.fill(kWeightFloor);
  Rng rng(5);
  for (int i = 0; i < 1000; ++i) {
    w = PerturbReal(w, rng);
    EXPECT_TRUE(SatisfiesEncoding(w));
  }
}

TEST(EvolutionStrategyTest, RejectsZeroParameters) {
  EXPECT_THROW(EvolutionStrategy(Params(0, 4), 1), StartupError);
  EXPECT_THROW(EvolutionStrategy(Params(5, 0), 1), StartupError);
  EXPECT_THROW(EvolutionStrategy(Params(5, 4, 0), 1), StartupError);
}

TEST(EvolutionStrategyTest, BestChildWins) {
  EvolutionStrategy es(Params(1, 4), 1);
  const auto cands = RunGeneration(es, {5, 3, 7, 2, 5});
  EXPECT_EQ(es.last_winner(), 2u);
  EXPECT_EQ(es.parents()[0].genotype, cands[2].genotype);
  EXPECT_EQ(es.parents()[0].fitness, 7u);
}

TEST(EvolutionStrategyTest, TiesFavorOffspring) {
  EvolutionStrategy es(Params(1, 4), 1);
  const auto cands = RunGeneration(es, {5, 5, 1, 1, 1});
  EXPECT_EQ(es.last_winner(), 1u);
  EXPECT_EQ(es.parents()[0].genotype, cands[1].genotype);
}

TEST(EvolutionStrategyTest, ParentRetained) {
  EvolutionStrategy es(Params(1, 4), 1);
  const auto cands = RunGeneration(es, {5, 4, 3, 2, 1});
  EXPECT_EQ(es.last_winner(), 0u);
  EXPECT_EQ(es.parents()[0].genotype, cands[0].genotype);
}

TEST(EvolutionStrategyTest, GenerationLayout) {
  EvolutionStrategy es(Params(3, 4), 7);
  ASSERT_EQ(es.candidates().size(), 5u);
  EXPECT_EQ(es.candidates()[0].genotype, es.parents()[0].genotype);
  for (size_t c = 1; c < 5; ++c) {
    const auto diff = std::get<OperatorMask>(es.candidates()[c].genotype) ^
                      std::get<OperatorMask>(es.parents()[0].genotype);
    EXPECT_LE(diff.count(), 2u);  // one flip, or the empty-mask guard
  }
}

TEST(EvolutionStrategyTest, RoundRobinFairness) {
  EvolutionStrategy es(Params(5, 4), 3);
  for (int k = 1; k <= 4; ++k) {
    for (int g = 0; g < 5; ++g) {
      EXPECT_EQ(es.cursor(), static_cast<size_t>(g));
      RunGeneration(es, {0, 0, 0, 0, 0});
    }
    for (uint64_t gens : es.generations()) EXPECT_EQ(gens, static_cast<uint64_t>(k));
  }
}

TEST(EvolutionStrategyTest, WindowAttribution) {
  constexpr size_t kWindow = 7;
  EvolutionStrategy es(Params(2, 3, kWindow), 4);
  std::vector<size_t> attributed;
  size_t count = 0;
  for (int i = 0; i < 2 * 4 * kWindow * 3; ++i) {
    ++count;
    if (auto rec = es.Report(i % 3 == 0)) {
      attributed.push_back(count);
      count = 0;
    }
  }
  ASSERT_EQ(attributed.size(), 24u);
  for (size_t c : attributed) EXPECT_EQ(c, kWindow);
}

TEST(EvolutionStrategyTest, ReportSumsNewPaths) {
  EvolutionStrategy es(Params(1, 1, 4), 4);
  EXPECT_FALSE(es.Report(true));
  EXPECT_FALSE(es.Report(false));
  EXPECT_FALSE(es.Report(true));
  const auto rec = es.Report(false);
  ASSERT_TRUE(rec);
  EXPECT_EQ(rec->fitness, 2u);
  EXPECT_EQ(rec->candidate_index, 0u);
  EXPECT_EQ(es.active_index(), 1u);
}

TEST(EvolutionStrategyTest, EpochChangesWithActive) {
  EvolutionStrategy es(Params(2, 2, 2), 4);
  uint64_t epoch = es.epoch();
  for (int i = 0; i < 40; ++i) {
    const bool closed = es.Report(false).has_value();
    EXPECT_EQ(es.epoch() != epoch, closed);
    epoch = es.epoch();
  }
}

TEST(EvolutionStrategyTest, BestParent) {
  EvolutionStrategy es(Params(5, 1), 9);
  EXPECT_FALSE(es.Best().evaluated);
  EXPECT_EQ(es.Best().index, 0u);
  const uint64_t latest[5] = {2, 9, 4, 4, 1};
  for (uint64_t f : latest) RunGeneration(es, {f, 0});
  const BestParent best = es.Best();
  EXPECT_TRUE(best.evaluated);
  EXPECT_EQ(best.index, 1u);
  EXPECT_EQ(best.solution.fitness, 9u);
}

TEST(EvolutionStrategyTest, BestParentTiesToLowestIndex) {
  EvolutionStrategy es(Params(3, 1), 9);
  for (int i = 0; i < 3; ++i) RunGeneration(es, {0, 0});
  EXPECT_EQ(es.Best().index, 0u);
  EvolutionStrategy single(Params(1, 1), 9);
  RunGeneration(single, {3, 1});
  EXPECT_EQ(single.Best().index, 0u);
}

// Synthetic fitness streams against a brute-force argmax with ties to the
// latest candidate.
TEST(EvolutionStrategyTest, SelectionMatchesBruteForce) {
  Rng stream(31);
  EvolutionStrategy es(Params(5, 4), 77);
  for (int gen = 0; gen < 2000; ++gen) {
    const size_t parent = es.cursor();
    std::vector<uint64_t> fitness(5);
    for (auto &f : fitness) f = stream.Below(4);
    const auto cands = RunGeneration(es, fitness);
    size_t expect = 0;
    for (size_t i = 0; i < fitness.size(); ++i)
      if (fitness[i] >= fitness[expect]) expect = i;
    ASSERT_EQ(es.last_winner(), expect);
    ASSERT_EQ(es.parents()[parent].genotype, cands[expect].genotype);
    for (uint64_t f : fitness) ASSERT_GE(es.parents()[parent].fitness, f);
  }
}

TEST(EvolutionStrategyTest, ActiveGenotypesSatisfyEncoding) {
  for (Encoding enc : {Encoding::kBinary, Encoding::kReal}) {
    EsParams p = Params(3, 4, 3);
    p.encoding = enc;
    EvolutionStrategy es(p, 12);
    Rng stream(1);
    for (int i = 0; i < 5000; ++i) {
      ASSERT_TRUE(SatisfiesEncoding(es.active()));
      es.Report(stream.Below(5) == 0);
    }
  }
}

TEST(FormatGenotypeTest, MaskAndWeights) {
  OperatorMask mask;
  mask.set(0);
  mask.set(16);
  EXPECT_EQ(FormatGenotype(mask, ';'), "1;0;0;0;0;0;0;0;0;0;0;0;0;0;0;0;1");
  OperatorWeights w;
  w.fill(0.5);
  w[1] = 1e-6;
  EXPECT_EQ(FormatGenotype(w, ' ').substr(0, 10), "0.5 1e-06 ");
}

}  // namespace
}  // namespace darwinfuzz
