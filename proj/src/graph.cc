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

#include "resolvekit/graph.h"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "resolvekit/error.h"
#include "resolvekit/parallel.h"

namespace resolvekit {

Graph BuildGraph(std::size_t n, std::span<const Edge> edges, EdgeListReport* report) {
  EdgeListReport counts;
  counts.input_pairs = edges.size();

  std::vector<Edge> normalized;
  normalized.reserve(edges.size());
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw InvalidInputError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                              ") references a vertex id >= n = " + std::to_string(n));
    }
    if (u == v) {
      ++counts.dropped_self_loops;
      continue;
    }
    normalized.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(normalized.begin(), normalized.end());
  const auto last = std::unique(normalized.begin(), normalized.end());
  counts.duplicate_pairs = static_cast<std::size_t>(normalized.end() - last);
  normalized.erase(last, normalized.end());

  Graph g;
  g.offsets_.assign(n + 1, 0);
  for (const auto& [u, v] : normalized) {
    ++g.offsets_[u + 1];
    ++g.offsets_[v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];
  g.targets_.resize(2 * normalized.size());
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // Smaller neighbors first, then larger ones; both passes visit the sorted
  // pairs in increasing order, so every list comes out sorted.
  for (const auto& [u, v] : normalized) g.targets_[cursor[v]++] = u;
  for (const auto& [u, v] : normalized) g.targets_[cursor[u]++] = v;

  if (n > 0 && n <= Graph::kMaxBitsetVertices) {
    g.words_per_row_ = (n + 63) / 64;
    g.bits_.assign(n * g.words_per_row_, 0);
    for (std::size_t u = 0; u < n; ++u) {
      std::uint64_t* row = g.bits_.data() + u * g.words_per_row_;
      for (Vertex v : g.neighbors(static_cast<Vertex>(u))) row[v / 64] |= 1ULL << (v % 64);
    }
  }
  if (report != nullptr) *report = counts;
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (words_per_row_ > 0) {
    return (bits_[u * words_per_row_ + v / 64] >> (v % 64)) & 1ULL;
  }
  const auto nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (Vertex u = 0; u < num_vertices(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<std::vector<int>> ModifiedAdjacency::Dense() const {
  const std::size_t n = size();
  std::vector<std::vector<int>> rows(n, std::vector<int>(n, 0));
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) rows[u][v] = entry(u, v);
  }
  return rows;
}

std::uint32_t Distance::hops() const {
  if (!reachable_) throw InvalidInputError("hop count requested for an UNREACHABLE distance");
  return hops_;
}

DistanceMatrix::DistanceMatrix(std::size_t n, std::vector<std::int32_t> codes)
    : n_(n), codes_(std::move(codes)) {
  if (codes_.size() != n * n) throw InvalidInputError("distance matrix must be n x n");
}

DistanceMatrix AllPairsDistances(const Graph& graph) {
  const std::size_t n = graph.num_vertices();
  std::vector<std::int32_t> codes(n * n, DistanceMatrix::kUnreachableCode);
  ParallelFor(n, [&](std::size_t source) {
    std::int32_t* row = codes.data() + source * n;
    std::vector<Vertex> frontier{static_cast<Vertex>(source)};
    std::vector<Vertex> next;
    row[source] = 0;
    for (std::int32_t depth = 1; !frontier.empty(); ++depth) {
      next.clear();
      for (Vertex u : frontier) {
        for (Vertex v : graph.neighbors(u)) {
          if (row[v] == DistanceMatrix::kUnreachableCode) {
            row[v] = depth;
            next.push_back(v);
          }
        }
      }
      frontier.swap(next);
    }
  });
  return DistanceMatrix(n, std::move(codes));
}

Distance Diameter(const DistanceMatrix& distances) {
  std::uint32_t best = 0;
  for (Vertex u = 0; u < distances.size(); ++u) {
    for (Vertex v = u + 1; v < distances.size(); ++v) {
      const Distance d = distances.at(u, v);
      if (!d.reachable()) return Distance::Unreachable();
      best = std::max(best, d.hops());
    }
  }
  return Distance(best);
}

namespace {

// Vertices within two hops of u (excluding u) as a bitset; neighbor-list
// fallback for graphs too large for per-vertex bitsets.
std::uint64_t CountBeyondTwoFrom(const Graph& graph, Vertex u, std::vector<std::uint64_t>& reach) {
  const std::size_t n = graph.num_vertices();
  const std::size_t words = (n + 63) / 64;
  reach.assign(words, 0);
  auto set = [&](Vertex v) { reach[v / 64] |= 1ULL << (v % 64); };
  set(u);
  for (Vertex v : graph.neighbors(u)) {
    set(v);
    if (graph.has_bitsets()) {
      const auto row = graph.adjacency_bits(v);
      for (std::size_t w = 0; w < words; ++w) reach[w] |= row[w];
    } else {
      for (Vertex x : graph.neighbors(v)) set(x);
    }
  }
  // Count vertices v > u outside the two-hop ball.
  std::uint64_t beyond = 0;
  const std::size_t first = (u + 1) / 64;
  for (std::size_t w = first; w < words; ++w) {
    std::uint64_t unreached = ~reach[w];
    if (w == first) unreached &= ~0ULL << ((u + 1) % 64);
    if (w == words - 1 && n % 64 != 0) unreached &= (1ULL << (n % 64)) - 1;
    beyond += static_cast<std::uint64_t>(std::popcount(unreached));
  }
  return beyond;
}

}  // namespace

std::uint64_t CountPairsBeyondDistanceTwo(const Graph& graph) {
  const std::size_t n = graph.num_vertices();
  std::vector<std::uint64_t> per_vertex(n, 0);
  ParallelFor(n, [&](std::size_t u) {
    thread_local std::vector<std::uint64_t> reach;
    per_vertex[u] = CountBeyondTwoFrom(graph, static_cast<Vertex>(u), reach);
  });
  std::uint64_t total = 0;
  for (std::uint64_t c : per_vertex) total += c;
  return total;
}

Graph ReadEdgeList(std::istream& in, std::optional<std::size_t> vertex_count,
                   EdgeListReport* report) {
  std::vector<Edge> edges;
  std::optional<std::size_t> header_count;
  std::size_t max_id_plus_one = 0;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#') {
      std::istringstream comment(line.substr(start + 1));
      std::string key;
      std::size_t value = 0;
      if (comment >> key && key == "vertices" && comment >> value) header_count = value;
      continue;
    }
    std::istringstream fields(line);
    long long u = -1;
    long long v = -1;
    std::string extra;
    if (!(fields >> u >> v) || (fields >> extra) || u < 0 || v < 0 ||
        u > static_cast<long long>(UINT32_MAX) || v > static_cast<long long>(UINT32_MAX)) {
      throw InvalidInputError("malformed edge on line " + std::to_string(line_number) + ": '" +
                              line + "'");
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    max_id_plus_one = std::max<std::size_t>(max_id_plus_one, std::max(u, v) + 1);
  }
  const std::size_t n = vertex_count.value_or(header_count.value_or(max_id_plus_one));
  return BuildGraph(n, edges, report);
}

void WriteEdgeList(std::ostream& out, const Graph& graph) {
  out << "# vertices " << graph.num_vertices() << "\n";
  for (const auto& [u, v] : graph.edges()) out << u << ' ' << v << '\n';
}

}  // namespace resolvekit
