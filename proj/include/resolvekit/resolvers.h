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

#ifndef RESOLVEKIT_RESOLVERS_H_
#define RESOLVEKIT_RESOLVERS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "resolvekit/graph.h"
#include "resolvekit/mine.h"
#include "resolvekit/rng.h"
#include "resolvekit/sbm.h"

namespace resolvekit {

enum class TargetKind { kAdjacency, kModifiedAdjacency, kDistance };

// "A", "A*" or "D".
std::string TargetName(TargetKind kind);

// The matrix whose columns are selected. Non-owning: the graph or distance
// matrix must outlive the target.
class ResolvingTarget {
 public:
  static ResolvingTarget Adjacency(const Graph& graph);
  static ResolvingTarget ModifiedAdjacency(const Graph& graph);
  static ResolvingTarget Distances(const DistanceMatrix& distances);

  TargetKind kind() const { return kind_; }
  std::size_t size() const;
  // Entry (row, column). Distances use DistanceMatrix::code, so UNREACHABLE
  // compares equal only to itself.
  std::int32_t value(Vertex row, Vertex column) const;

  const Graph* graph() const { return graph_; }
  const DistanceMatrix* distances() const { return distances_; }

 private:
  ResolvingTarget(TargetKind kind, const Graph* graph, const DistanceMatrix* distances)
      : kind_(kind), graph_(graph), distances_(distances) {}

  TargetKind kind_;
  const Graph* graph_;
  const DistanceMatrix* distances_;
};

// Selected columns. Baselines return them in selection order.
using NodeSet = std::vector<Vertex>;

// Partition of the target's rows into classes of rows that agree on every
// column added so far. The columns resolve the target iff the partition is
// discrete. Adding a column costs O(degree) for A and A*, O(n) for D.
class PartitionRefiner {
 public:
  explicit PartitionRefiner(const ResolvingTarget& target);

  void AddColumn(Vertex column);

  std::size_t num_classes() const { return num_classes_; }
  bool discrete() const { return num_classes_ == class_of_.size(); }
  std::span<const std::uint32_t> class_of() const { return class_of_; }
  std::span<const std::uint32_t> class_sizes() const { return class_sizes_; }

 private:
  void MoveRow(Vertex row, std::uint32_t to);

  const ResolvingTarget* target_;
  std::vector<std::uint32_t> class_of_;
  std::vector<std::uint32_t> class_sizes_;
  std::size_t num_classes_ = 0;
};

// True iff the rows restricted to the columns in `set` are pairwise
// distinct. The empty set resolves only targets with at most one row.
// Throws InvalidInputError on an id >= n or a repeated id.
bool IsResolving(const ResolvingTarget& target, std::span<const Vertex> set);

struct BruteForceResult {
  std::size_t size = 0;
  NodeSet set;
};

// Minimum resolving set by enumerating subsets in increasing size, each size
// in lexicographic order; returns the first witness. Throws SizeCapError
// when n > cap and NoResolvingSetError when even all columns fail.
BruteForceResult BruteForceMetricDimension(const ResolvingTarget& target,
                                           std::size_t cap = 16);

struct IchOptions {
  // Distance targets are only accepted up to this many rows unless
  // allow_large_distance_target is set.
  std::size_t distance_cap = 16;
  bool allow_large_distance_target = false;
};

// Information Content Heuristic: repeatedly adds the column that maximizes
// the Shannon entropy (natural log) of the row partition, lowest id on ties,
// until the partition is discrete. Throws NoResolvingSetError when the target
// has duplicate rows and SizeCapError for oversized distance targets.
NodeSet InformationContentHeuristic(const ResolvingTarget& target, IchOptions options = {});

// Repeatedly picks the community i minimizing f(counts + e_i), draws an
// unused vertex uniformly from it and stops once the set resolves A*.
// Exhausted communities are skipped. The graph must be labeled contiguously
// as in `params`. Throws NoResolvingSetError if every vertex is used.
NodeSet GreedyBaseline(const Graph& graph, const SbmParams& params, std::uint64_t seed);

// Score of vertex w: f for the single column w, with each P(i, community(w))
// replaced by the fraction of V_i adjacent to w. Lower scores discriminate
// more row pairs.
std::vector<double> PreorderScores(const Graph& graph, const SbmParams& params);

// Deterministic variant of GreedyBaseline: within each community vertices
// are taken in ascending PreorderScores order (ties by id).
NodeSet PreorderBaseline(const Graph& graph, const SbmParams& params);

// Uniform draws without replacement from all vertices until A* resolves.
NodeSet RandomBaseline(const Graph& graph, std::uint64_t seed);

// k_i vertices drawn uniformly without replacement from each community i.
NodeSet DrawAllocation(const SbmParams& params, const Allocation& allocation, Rng& rng);

// Landmark embedding: row v holds the distances from v to each member of
// `set`. UNREACHABLE entries throw InvalidInputError unless a substitute
// value is supplied.
struct Embedding {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> values;  // row-major

  double at(std::size_t row, std::size_t col) const { return values[row * cols + col]; }
};

Embedding Embed(const DistanceMatrix& distances, std::span<const Vertex> set,
                std::optional<double> unreachable_value = std::nullopt);

}  // namespace resolvekit

#endif  // RESOLVEKIT_RESOLVERS_H_
