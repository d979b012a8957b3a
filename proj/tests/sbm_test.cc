// Copyright 2026 The ResolveKit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <random>

#include "resolvekit/error.h"
#include "resolvekit/mine.h"
#include "resolvekit/resolvers.h"
#include "resolvekit/rng.h"
#include "resolvekit/sbm.h"

namespace resolvekit {
namespace {

using Matrix = std::vector<std::vector<double>>;

double Choose2(double n) { return n * (n - 1) / 2; }

// Independent reference for f: direct powers, no logs.
double DirectF(const SbmParams& params, const std::vector<std::int64_t>& k) {
  const std::size_t c = params.num_communities();
  double total = 0.0;
  for (std::size_t i = 0; i < c; ++i)
    for (std::size_t j = i; j < c; ++j) {
      double term = static_cast<double>(params.pair_count(i, j));
      for (std::size_t l = 0; l < c; ++l) {
        const double r = params.p(i, l) * params.p(j, l) +
                         (1 - params.p(i, l)) * (1 - params.p(j, l));
        term *= std::pow(r, static_cast<double>(k[l]));
      }
      total += term;
    }
  return total;
}

SbmParams FourBlockParams() {
  Matrix p(4, std::vector<double>(4, 0.3));
  for (int i = 0; i < 4; ++i) p[i][i] = 0.7;
  return SbmParams({1000, 500, 250, 250}, p);
}

TEST(SbmParams, ValidationNamesTheEntry) {
  try {
    SbmParams({3, 3}, {{0.5, 1.2}, {1.2, 0.5}});
    FAIL() << "expected InvalidInputError";
  } catch (const InvalidInputError& e) {
    EXPECT_NE(std::string(e.what()).find("P[0][1]"), std::string::npos) << e.what();
  }
  EXPECT_THROW(SbmParams({3, 3}, {{0.5, 0.2}, {0.3, 0.5}}), InvalidInputError);
  EXPECT_THROW(SbmParams({3, 0}, {{0.5, 0.2}, {0.2, 0.5}}), InvalidInputError);
  EXPECT_THROW(SbmParams({}, {}), InvalidInputError);
  EXPECT_THROW(SbmParams({3}, {{0.5, 0.2}}), InvalidInputError);
}

TEST(SbmParams, PairCounts) {
  const SbmParams params({4, 3}, {{0.1, 0.2}, {0.2, 0.3}});
  EXPECT_EQ(params.pair_count(0, 0), 6);
  EXPECT_EQ(params.pair_count(1, 1), 3);
  EXPECT_EQ(params.pair_count(0, 1), 12);
  EXPECT_EQ(params.community_of(3), 0u);
  EXPECT_EQ(params.community_of(4), 1u);
  EXPECT_EQ(params.labels(), (std::vector<std::uint32_t>{0, 0, 0, 0, 1, 1, 1}));
}

TEST(Sample, ProbabilityOneGivesCompleteGraph) {
  const Graph g = SampleSbm(SbmParams({3, 2}, {{1, 1}, {1, 1}}), 9);
  EXPECT_EQ(g.num_edges(), 10u);
}

TEST(Sample, ProbabilityZeroGivesEmptyGraph) {
  const Graph g = SampleSbm(SbmParams({3, 2}, {{0, 0}, {0, 0}}), 9);
  EXPECT_EQ(g.num_vertices(), 5u);
  EXPECT_EQ(g.num_edges(), 0u);
}

TEST(Sample, EdgeCountWithinFiveSigmaOfBinomial) {
  const Graph g = SampleSbm(SbmParams({1000, 1000}, {{0.5, 0.5}, {0.5, 0.5}}), 1234);
  const double pairs = Choose2(2000);
  const double mean = pairs * 0.5;
  const double sigma = std::sqrt(pairs * 0.25);
  EXPECT_LE(std::abs(static_cast<double>(g.num_edges()) - mean), 5 * sigma);
}

TEST(Sample, SeededAndThreadCountIndependent) {
  const SbmParams params({150, 90}, {{0.2, 0.05}, {0.05, 0.3}});
  setenv("RESOLVEKIT_THREADS", "1", 1);
  const Graph serial = SampleSbm(params, 77);
  setenv("RESOLVEKIT_THREADS", "5", 1);
  const Graph parallel = SampleSbm(params, 77);
  unsetenv("RESOLVEKIT_THREADS");
  EXPECT_EQ(serial, parallel);
  EXPECT_FALSE(SampleSbm(params, 78) == serial);
}

TEST(EstimateParams, CompleteGraph) {
  const Graph k4 = SampleSbm(SbmParams({4}, {{1.0}}), 0);
  const auto estimate = EstimateParams(LabeledGraph{k4, {0, 0, 1, 1}});
  EXPECT_EQ(estimate.params.matrix(), (Matrix{{1, 1}, {1, 1}}));
}

TEST(EstimateParams, PathWithSingletonCommunity) {
  std::vector<Edge> edges{{0, 1}, {1, 2}};
  const auto estimate = EstimateParams(LabeledGraph{BuildGraph(3, edges), {0, 0, 1}});
  EXPECT_EQ(estimate.params.matrix(), (Matrix{{1, 0.5}, {0.5, 0}}));
  EXPECT_FALSE(estimate.warnings.empty());
}

TEST(EstimateParams, EmptyGraph) {
  const auto estimate = EstimateParams(LabeledGraph{BuildGraph(4, {}), {0, 1, 0, 1}});
  EXPECT_EQ(estimate.params.matrix(), (Matrix{{0, 0}, {0, 0}}));
  EXPECT_EQ(estimate.params.sizes()[0], 2);
}

TEST(EstimateParams, RejectsEmptyCommunity) {
  EXPECT_THROW(EstimateParams(LabeledGraph{BuildGraph(3, {}), {0, 2, 2}}), InvalidInputError);
}

TEST(EstimateParams, RecoversSampledDensitiesWithinFiveSigma) {
  const Matrix p{{0.12, 0.03}, {0.03, 0.4}};
  const SbmParams params({500, 500}, p);
  const auto estimate = EstimateParams(LabeledGraph{SampleSbm(params, 5), params.labels()});
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const double pairs = static_cast<double>(params.pair_count(i, j));
      const double sigma = std::sqrt(p[i][j] * (1 - p[i][j]) / pairs);
      EXPECT_NEAR(estimate.params.p(i, j), p[i][j], 5 * sigma);
    }
}

TEST(ScaleCommunities, Examples) {
  const Matrix p3{{0.1, 0.1, 0.1}, {0.1, 0.1, 0.1}, {0.1, 0.1, 0.1}};
  EXPECT_EQ(ScaleCommunities(SbmParams({49, 43, 13}, p3), 10000).sizes()[2], 1238);
  const auto books = ScaleCommunities(SbmParams({49, 43, 13}, p3), 10000);
  EXPECT_EQ(std::vector<std::int64_t>(books.sizes().begin(), books.sizes().end()),
            (std::vector<std::int64_t>{4667, 4095, 1238}));
  const auto school = ScaleCommunities(SbmParams({110, 112, 14}, p3), 10000);
  EXPECT_EQ(std::vector<std::int64_t>(school.sizes().begin(), school.sizes().end()),
            (std::vector<std::int64_t>{4661, 4746, 593}));
  const auto karate = ScaleCommunities(SbmParams({17, 17}, {{0.2, 0.1}, {0.1, 0.2}}), 10000);
  EXPECT_EQ(karate.sizes()[0], 5000);
  EXPECT_EQ(karate.sizes()[1], 5000);
}

TEST(ScaleCommunities, RepairsRoundingDeficitAndRejectsEmpty) {
  const Matrix p3(3, std::vector<double>(3, 0.5));
  // Each third rounds to 3 (sum 9); the largest (first) absorbs the missing one.
  const auto scaled = ScaleCommunities(SbmParams({1, 1, 1}, p3), 10);
  EXPECT_EQ(scaled.num_vertices(), 10);
  EXPECT_EQ(scaled.sizes()[0], 4);
  EXPECT_THROW(ScaleCommunities(SbmParams({100, 1}, {{0.5, 0.5}, {0.5, 0.5}}), 10),
               InvalidInputError);
}

TEST(PairAgreement, Examples) {
  EXPECT_DOUBLE_EQ(PairAgreementProbability(SbmParams({2}, {{0.5}}), 0, 0, 0), 0.5);
  const SbmParams perfect({2, 2}, {{1, 0}, {0, 1}});
  EXPECT_DOUBLE_EQ(PairAgreementProbability(perfect, 0, 1, 0), 0.0);
  const SbmParams blogs({586, 636}, {{0.043, 0.004}, {0.004, 0.039}});
  EXPECT_NEAR(PairAgreementProbability(blogs, 0, 1, 0), 0.953344, 1e-12);
}

TEST(PairAgreement, InUnitIntervalAndOneOnlyAtDeterministicEqualEntries) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0, 1);
  for (int t = 0; t < 1000; ++t) {
    const double a = t % 7 == 0 ? 1.0 : u(rng), b = t % 11 == 0 ? 1.0 : u(rng);
    const SbmParams params({2, 2}, {{a, b}, {b, a}});
    const double r = PairAgreementProbability(params, 0, 1, 0);
    EXPECT_GE(r, 0.0);
    EXPECT_LE(r, 1.0);
    EXPECT_EQ(r == 1.0, a == b && (a == 0.0 || a == 1.0));
  }
}

TEST(ExpectedCollisions, Examples) {
  EXPECT_DOUBLE_EQ(ExpectedCollisions(SbmParams({4}, {{0.3}}), std::vector<std::int64_t>{0}),
                   6.0);
  EXPECT_DOUBLE_EQ(ExpectedCollisions(SbmParams({4}, {{0.5}}), std::vector<std::int64_t>{2}),
                   1.5);
  EXPECT_DOUBLE_EQ(ExpectedCollisions(SbmParams({2, 2}, {{1, 0}, {0, 1}}),
                                      std::vector<std::int64_t>{1, 0}),
                   2.0);
}

TEST(ExpectedCollisions, ZeroAllocationIsTotalPairCount) {
  const SbmParams params({7, 11, 5}, {{0.3, 0.1, 0.2}, {0.1, 0.6, 0.4}, {0.2, 0.4, 0.9}});
  EXPECT_DOUBLE_EQ(ExpectedCollisions(params, std::vector<std::int64_t>{0, 0, 0}),
                   Choose2(23));
}

TEST(ExpectedCollisions, MatchesDirectPowersAndIsMonotone) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0, 1);
  std::uniform_int_distribution<int> small(0, 40);
  for (int t = 0; t < 300; ++t) {
    const std::size_t c = 1 + t % 3;
    Matrix p(c, std::vector<double>(c));
    std::vector<std::int64_t> sizes(c);
    for (std::size_t i = 0; i < c; ++i) {
      sizes[i] = 1 + small(rng);
      for (std::size_t j = i; j < c; ++j) p[i][j] = p[j][i] = u(rng);
    }
    const SbmParams params(sizes, p);
    std::vector<std::int64_t> x(c), y(c);
    for (std::size_t i = 0; i < c; ++i) {
      x[i] = small(rng);
      y[i] = x[i] + small(rng) % 5;
    }
    const double fx = ExpectedCollisions(params, x);
    EXPECT_NEAR(fx, DirectF(params, x), 1e-9 * std::max(1.0, fx));
    EXPECT_LE(ExpectedCollisions(params, y), fx);
  }
}

TEST(ExpectedCollisions, LargeExponentsDoNotUnderflowToNaN) {
  const SbmParams params({5000, 5000}, {{0.257, 0.038}, {0.038, 0.228}});
  const double f = ExpectedCollisions(params, std::vector<std::int64_t>{3000, 3000});
  EXPECT_TRUE(std::isfinite(f));
  EXPECT_GE(f, 0.0);
}

// The mean number of colliding A* row pairs under random allocations stays
// below f(k) (within sampling noise).
TEST(ExpectedCollisions, BoundsMonteCarloCollisionCount) {
  const SbmParams params({25, 30}, {{0.4, 0.1}, {0.1, 0.3}});
  const Allocation k(std::vector<std::int64_t>{4, 5});
  const double f = ExpectedCollisions(params, k.counts());
  const int trials = 2000;
  double sum = 0, sum_sq = 0;
  for (int t = 0; t < trials; ++t) {
    const Graph g = SampleSbm(params, DeriveSeed(99, 0, t, 0));
    Rng rng(DeriveSeed(99, 1, t, 0));
    const NodeSet set = DrawAllocation(params, k, rng);
    const auto target = ResolvingTarget::ModifiedAdjacency(g);
    double collisions = 0;
    for (Vertex u = 0; u < 55; ++u)
      for (Vertex v = u + 1; v < 55; ++v) {
        bool same = true;
        for (Vertex w : set) same &= target.value(u, w) == target.value(v, w);
        collisions += same;
      }
    sum += collisions;
    sum_sq += collisions * collisions;
  }
  const double mean = sum / trials;
  const double sd = std::sqrt(std::max(0.0, sum_sq / trials - mean * mean));
  EXPECT_LE(mean, f + 3 * sd / std::sqrt(trials)) << "mean " << mean << " f " << f;
  // Most pairs never touch a selected column, so the bound is nearly tight.
  EXPECT_GE(mean, 0.5 * f);
}

TEST(ExpectedLongPairs, Examples) {
  const auto ones = ExpectedLongPairs(SbmParams({3, 4}, {{1, 1}, {1, 1}}));
  EXPECT_EQ(ones.total, 0.0);
  const auto zeros = ExpectedLongPairs(SbmParams({2, 2}, {{0, 0}, {0, 0}}));
  EXPECT_DOUBLE_EQ(zeros.per_block[0][0], 1.0);
  EXPECT_DOUBLE_EQ(zeros.per_block[0][1], 4.0);
  EXPECT_DOUBLE_EQ(zeros.per_block[1][1], 1.0);
  EXPECT_DOUBLE_EQ(zeros.fraction, 1.0);
}

TEST(ExpectedLongPairs, MatchesIndependentValue) {
  // C(600,2) * 0.88 * (1 - 0.0144)^598, evaluated separately.
  const auto estimate = ExpectedLongPairs(SbmParams({300, 300}, {{0.12, 0.12}, {0.12, 0.12}}));
  EXPECT_NEAR(estimate.total, 27.042463476862466, 1e-8);
}

TEST(ExpectedLongPairs, EmpiricalMeanWithinThreeSigma) {
  const SbmParams params({300, 300}, {{0.12, 0.12}, {0.12, 0.12}});
  const double expected = ExpectedLongPairs(params).total;
  const int graphs = 200;
  double sum = 0, sum_sq = 0;
  for (int g = 0; g < graphs; ++g) {
    const double count = static_cast<double>(CountPairsBeyondDistanceTwo(SampleSbm(params, g)));
    sum += count;
    sum_sq += count * count;
  }
  const double mean = sum / graphs;
  const double sd = std::sqrt(sum_sq / graphs - mean * mean);
  EXPECT_NEAR(mean, expected, 3 * sd / std::sqrt(graphs));
}

TEST(ExpectedLongPairs, KarateScaleIsTiny) {
  const auto estimate = ExpectedLongPairs(SbmParams({2500, 2500}, {{0.257, 0.038}, {0.038, 0.228}}));
  EXPECT_GT(estimate.total, 0.0);
  EXPECT_LT(estimate.fraction, 1e-6);
}

TEST(DiameterTwoCondition, Examples) {
  const auto ones = DiameterTwoCondition(SbmParams({5, 5}, {{1, 1}, {1, 1}}), 2.0);
  EXPECT_TRUE(ones.holds);
  EXPECT_TRUE(ones.pairs.empty());
  const auto four = DiameterTwoCondition(FourBlockParams(), 1.5);
  EXPECT_TRUE(four.holds);
  EXPECT_EQ(four.pairs.size(), 10u);
  double smallest = 1e300;
  for (const auto& pair : four.pairs) smallest = std::min(smallest, pair.lhs);
  // Every pair sums at least 2000 * 0.3 * 0.3 = 180 over the blocks; the
  // exact minimum is the (250, 250) cross pair: 2 * 250 * 0.21 + 1500 * 0.09.
  EXPECT_GE(smallest, 180.0);
  EXPECT_NEAR(smallest, 240.0, 1e-9);
  const auto sparse = DiameterTwoCondition(SbmParams({100, 100}, {{0.01, 0.01}, {0.01, 0.01}}), 2.0);
  EXPECT_FALSE(sparse.holds);
  EXPECT_NEAR(sparse.pairs[0].lhs, 0.02, 1e-12);
  EXPECT_NEAR(sparse.pairs[0].rhs, 2 * std::log(1e4), 1e-9);
  EXPECT_THROW(DiameterTwoCondition(FourBlockParams(), 1.0), InvalidInputError);
}

TEST(DiameterAboveTwoCondition, Examples) {
  EXPECT_FALSE(DiameterAboveTwoCondition(SbmParams({5, 5}, {{1, 1}, {1, 1}}), 0.5).holds);
  const auto sparse = DiameterAboveTwoCondition(SbmParams({1000}, {{0.01}}), 0.9);
  ASSERT_TRUE(sparse.holds);
  EXPECT_EQ(sparse.witness->clause, 'a');
  EXPECT_NEAR(sparse.witness->lhs, 0.1, 1e-12);
  EXPECT_NEAR(sparse.witness->rhs, 0.9 * std::log(1e6), 1e-9);
  EXPECT_FALSE(DiameterAboveTwoCondition(FourBlockParams(), 0.5).holds);
  EXPECT_THROW(DiameterAboveTwoCondition(FourBlockParams(), 1.0), InvalidInputError);
}

TEST(ErdosRenyi, Examples) {
  EXPECT_EQ(ErdosRenyiBetaUpper(500, 0.5), 18);
  EXPECT_EQ(ErdosRenyiAnySetSize(500, 0.5), 27);
  EXPECT_EQ(ErdosRenyiBetaUpper(2, 0.5), 2);
  for (std::int64_t n : {10, 100, 1000, 100000}) {
    EXPECT_EQ(ErdosRenyiAnySetSize(n, 0.5),
              static_cast<std::int64_t>(std::ceil(3 * std::log(n) / std::log(2.0))));
  }
  EXPECT_THROW(ErdosRenyiBetaUpper(500, 0.0), InvalidInputError);
  EXPECT_THROW(ErdosRenyiBetaUpper(500, 1.0), InvalidInputError);
  EXPECT_THROW(ErdosRenyiAnySetSize(500, 1.5), InvalidInputError);
}

TEST(ErdosRenyi, SymmetricInPAndAnySetDominates) {
  for (std::int64_t n : {3, 50, 500, 10000})
    for (double p : {0.05, 0.2, 0.3, 0.45}) {
      EXPECT_EQ(ErdosRenyiBetaUpper(n, p), ErdosRenyiBetaUpper(n, 1 - p));
      EXPECT_GE(ErdosRenyiAnySetSize(n, p), ErdosRenyiBetaUpper(n, p));
    }
}

}  // namespace
}  // namespace resolvekit
