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

#ifndef RESOLVEKIT_SBM_H_
#define RESOLVEKIT_SBM_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "resolvekit/graph.h"

namespace resolvekit {

using Community = std::size_t;

// Stochastic block model parameters: community sizes n_1..n_c and a
// symmetric c x c matrix of edge probabilities. Vertices are labeled
// contiguously: community 0 owns ids [0, n_1), community 1 the next n_2, ...
class SbmParams {
 public:
  // Throws InvalidInputError naming the offending entry if c == 0, a size is
  // < 1, the matrix is not c x c, an entry is outside [0, 1], or the matrix
  // is not exactly symmetric.
  SbmParams(std::vector<std::int64_t> community_sizes,
            std::vector<std::vector<double>> probabilities);

  std::size_t num_communities() const { return sizes_.size(); }
  std::int64_t num_vertices() const { return total_; }
  std::int64_t size(Community i) const { return sizes_[i]; }
  std::span<const std::int64_t> sizes() const { return sizes_; }
  double p(Community i, Community j) const { return probabilities_[i][j]; }
  const std::vector<std::vector<double>>& matrix() const { return probabilities_; }

  // Unordered vertex pairs with one end in V_i and the other in V_j:
  // C(n_i, 2) when i == j, n_i * n_j otherwise.
  std::int64_t pair_count(Community i, Community j) const;

  Vertex first_vertex(Community i) const { return static_cast<Vertex>(offsets_[i]); }
  Community community_of(Vertex v) const;
  // Contiguous label vector: labels[v] = community of v.
  std::vector<std::uint32_t> labels() const;

  friend bool operator==(const SbmParams& a, const SbmParams& b) {
    return a.sizes_ == b.sizes_ && a.probabilities_ == b.probabilities_;
  }

 private:
  std::vector<std::int64_t> sizes_;
  std::vector<std::vector<double>> probabilities_;
  std::vector<std::int64_t> offsets_;
  std::int64_t total_ = 0;
};

// A graph with a community label per vertex.
struct LabeledGraph {
  Graph graph;
  std::vector<std::uint32_t> labels;

  // Number of communities, i.e. max label + 1. Throws InvalidInputError if
  // the label count differs from the vertex count or some community in
  // [0, c) is empty.
  std::size_t Validate() const;
};

// Draws a graph from SBM(n; C, P). Pair {u, v} (u < v) is an edge iff the
// counter-based uniform for (seed, u, v) falls below P; the result depends
// only on (params, seed), never on the thread count.
Graph SampleSbm(const SbmParams& params, std::uint64_t seed);

struct ParamsEstimate {
  SbmParams params;
  std::vector<std::string> warnings;
};

// Maximum-likelihood block densities: edges between V_i and V_j divided by
// pair_count(i, j). A singleton community gets P(i, i) = 0 plus a warning.
ParamsEstimate EstimateParams(const LabeledGraph& labeled);

// Rescales community sizes to round(n_target * n_i / n). If the rounded
// sizes do not sum to n_target, the largest community (lowest index on ties)
// absorbs the difference. P is unchanged.
SbmParams ScaleCommunities(const SbmParams& params, std::int64_t n_target);

// r(i, j, l): probability that A*(u, w) == A*(v, w) for distinct u in V_i,
// v in V_j and w in V_l.
double PairAgreementProbability(const SbmParams& params, Community i, Community j,
                                Community l);

// f(k) = sum_{i <= j} s(i, j) * prod_l r(i, j, l)^{k_l}, the first-moment
// bound on colliding A* row pairs when k_l random columns come from each
// community l. Precomputes log r once so repeated evaluations are O(c^3).
class CollisionBound {
 public:
  explicit CollisionBound(const SbmParams& params);

  std::size_t num_communities() const { return c_; }
  // Requires k.size() == c and all entries >= 0.
  double operator()(std::span<const std::int64_t> k) const;

 private:
  std::size_t c_;
  std::vector<double> pair_counts_;  // c*c, upper triangle used
  std::vector<double> log_r_;        // c*c*c, -inf where r == 0
};

double ExpectedCollisions(const SbmParams& params, std::span<const std::int64_t> k);

// Expected number of vertex pairs at distance > 2.
struct LongPairEstimate {
  // per_block[i][j] = E(W_ij) for i <= j; zero below the diagonal.
  std::vector<std::vector<double>> per_block;
  double total = 0.0;
  // total / C(n, 2).
  double fraction = 0.0;
};

LongPairEstimate ExpectedLongPairs(const SbmParams& params);

// One block pair of the diameter-two condition
// sum_k n_k P(i,k) P(k,j) >= C ln(n_i n_j).
struct BlockCondition {
  Community i = 0;
  Community j = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
};

struct DiameterTwoReport {
  double constant = 0.0;
  // Only pairs with s(i,j)(1 - P(i,j)) > 0, the finite-n stand-in for the
  // asymptotic index set; the condition is vacuous when this is empty.
  std::vector<BlockCondition> pairs;
  bool holds = true;
};

// Requires constant > 1.
DiameterTwoReport DiameterTwoCondition(const SbmParams& params, double constant);

struct DiameterAboveTwoWitness {
  Community i = 0;
  Community j = 0;
  // 'a': sum_k n_k P(i,k)^2 <= C ln(n^2).
  // 'b': sum_k n_k P(i,k)P(k,j) <= C ln(n^2) + ln(1 - P(i,j)) and
  //      max_k P(k,j) <= 1/2.
  char clause = 'a';
  double lhs = 0.0;
  double rhs = 0.0;
};

struct DiameterAboveTwoReport {
  double constant = 0.0;
  bool holds = false;
  // First (i, j) in row-major order satisfying either clause.
  std::optional<DiameterAboveTwoWitness> witness;
};

// Requires 0 < constant < 1.
DiameterAboveTwoReport DiameterAboveTwoCondition(const SbmParams& params, double constant);

// ceil(-2 ln n / ln(p^2 + (1-p)^2)); requires 0 < p < 1.
std::int64_t ErdosRenyiBetaUpper(std::int64_t n, double p);
// ceil(-3 ln n / ln(p^2 + (1-p)^2)): any set this large resolves G(n, p)
// with probability at least 1 - 1/(2n). Requires 0 < p < 1.
std::int64_t ErdosRenyiAnySetSize(std::int64_t n, double p);

}  // namespace resolvekit

#endif  // RESOLVEKIT_SBM_H_
