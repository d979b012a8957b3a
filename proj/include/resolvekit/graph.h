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

#ifndef RESOLVEKIT_GRAPH_H_
#define RESOLVEKIT_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace resolvekit {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

// Normalization counters from BuildGraph.
struct EdgeListReport {
  std::size_t input_pairs = 0;
  std::size_t dropped_self_loops = 0;
  std::size_t duplicate_pairs = 0;
};

// Simple undirected graph on vertices 0..n-1. Immutable once built; stores
// sorted neighbor lists and, below kMaxBitsetVertices, one adjacency bitset
// per vertex for constant-time membership probes.
class Graph {
 public:
  static constexpr std::size_t kMaxBitsetVertices = 1 << 15;

  Graph() = default;

  std::size_t num_vertices() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t num_edges() const { return targets_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex u) const {
    return {targets_.data() + offsets_[u], targets_.data() + offsets_[u + 1]};
  }
  std::size_t degree(Vertex u) const { return offsets_[u + 1] - offsets_[u]; }

  bool has_edge(Vertex u, Vertex v) const;

  bool has_bitsets() const { return words_per_row_ > 0 || num_vertices() == 0; }
  std::size_t words_per_row() const { return words_per_row_; }
  // Adjacency bitset of u; empty when has_bitsets() is false.
  std::span<const std::uint64_t> adjacency_bits(Vertex u) const {
    if (words_per_row_ == 0) return {};
    return {bits_.data() + u * words_per_row_, words_per_row_};
  }

  // Edges as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.offsets_ == b.offsets_ && a.targets_ == b.targets_;
  }

 private:
  friend Graph BuildGraph(std::size_t n, std::span<const Edge> edges,
                          EdgeListReport* report);

  std::vector<std::size_t> offsets_;
  std::vector<Vertex> targets_;
  std::size_t words_per_row_ = 0;
  std::vector<std::uint64_t> bits_;
};

// Builds a simple graph. Self-loops are dropped and repeated pairs (in either
// orientation) collapsed; both are counted in *report when non-null.
// Throws InvalidInputError if any id is >= n.
Graph BuildGraph(std::size_t n, std::span<const Edge> edges,
                 EdgeListReport* report = nullptr);

// A* = A + 2I, exposed as a view over the graph.
class ModifiedAdjacency {
 public:
  explicit ModifiedAdjacency(const Graph& graph) : graph_(&graph) {}

  std::size_t size() const { return graph_->num_vertices(); }
  int entry(Vertex u, Vertex v) const {
    if (u == v) return 2;
    return graph_->has_edge(u, v) ? 1 : 0;
  }
  std::vector<std::vector<int>> Dense() const;

 private:
  const Graph* graph_;
};

// Hop count, or the UNREACHABLE tag. There is no arithmetic on this type;
// hops() on an unreachable distance throws.
class Distance {
 public:
  static constexpr Distance Unreachable() { return Distance(); }
  constexpr explicit Distance(std::uint32_t hops) : hops_(hops), reachable_(true) {}

  constexpr bool reachable() const { return reachable_; }
  std::uint32_t hops() const;

  friend constexpr bool operator==(const Distance&, const Distance&) = default;

 private:
  constexpr Distance() = default;

  std::uint32_t hops_ = 0;
  bool reachable_ = false;
};

class DistanceMatrix {
 public:
  // Dense encoding used by code(): hop count, or kUnreachableCode.
  static constexpr std::int32_t kUnreachableCode = -1;

  DistanceMatrix() = default;
  DistanceMatrix(std::size_t n, std::vector<std::int32_t> codes);

  std::size_t size() const { return n_; }
  Distance at(Vertex u, Vertex v) const {
    const std::int32_t c = codes_[static_cast<std::size_t>(u) * n_ + v];
    return c == kUnreachableCode ? Distance::Unreachable()
                                 : Distance(static_cast<std::uint32_t>(c));
  }
  // Row-equality key for grouping; not a distance.
  std::int32_t code(Vertex u, Vertex v) const {
    return codes_[static_cast<std::size_t>(u) * n_ + v];
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::int32_t> codes_;
};

// Exact hop counts by BFS from every vertex (sources run in parallel).
DistanceMatrix AllPairsDistances(const Graph& graph);

// Largest finite distance, or UNREACHABLE if some pair is disconnected.
// The empty graph and the single vertex both have diameter 0.
Distance Diameter(const DistanceMatrix& distances);

// Number of unordered pairs {u, v} at distance > 2 (including disconnected
// pairs). Uses the adjacency bitsets, so no distance matrix is formed.
std::uint64_t CountPairsBeyondDistanceTwo(const Graph& graph);

// "u v" lines; '#' comments and blank lines ignored. The vertex count is
// `vertex_count` when given, else a "# vertices N" header when present, else
// max id + 1. Throws InvalidInputError on malformed lines.
Graph ReadEdgeList(std::istream& in, std::optional<std::size_t> vertex_count = std::nullopt,
                   EdgeListReport* report = nullptr);
// Writes the "# vertices N" header followed by one sorted "u v" line per edge.
void WriteEdgeList(std::ostream& out, const Graph& graph);

}  // namespace resolvekit

#endif  // RESOLVEKIT_GRAPH_H_
