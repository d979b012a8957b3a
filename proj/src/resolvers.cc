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

#include "resolvekit/resolvers.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "resolvekit/error.h"

namespace resolvekit {
namespace {

bool IsSparse(TargetKind kind) { return kind != TargetKind::kDistance; }

void ValidateSet(std::size_t n, std::span<const Vertex> set) {
  std::vector<bool> seen(n, false);
  for (Vertex v : set) {
    if (v >= n) {
      throw InvalidInputError("vertex " + std::to_string(v) + " is out of range for n = " +
                              std::to_string(n));
    }
    if (seen[v]) throw InvalidInputError("vertex " + std::to_string(v) + " appears twice");
    seen[v] = true;
  }
}

std::uint64_t PairKey(std::uint32_t cls, std::int32_t value) {
  return (static_cast<std::uint64_t>(cls) << 32) | static_cast<std::uint32_t>(value);
}

// x ln x with 0 ln 0 = 0; entropy maximization is minimization of the sum
// of this over class sizes.
class XLogX {
 public:
  explicit XLogX(std::size_t n) : table_(n + 1, 0.0) {
    for (std::size_t x = 2; x <= n; ++x) {
      table_[x] = static_cast<double>(x) * std::log(static_cast<double>(x));
    }
  }
  double operator()(std::size_t x) const { return table_[x]; }

 private:
  std::vector<double> table_;
};

// Entropy-relevant change in sum(x ln x) when the current partition is
// refined by one candidate column.
class SplitScorer {
 public:
  SplitScorer(const ResolvingTarget& target, const XLogX& g) : target_(&target), g_(&g) {}

  double Cost(const PartitionRefiner& partition, Vertex column) {
    return IsSparse(target_->kind()) ? SparseCost(partition, column)
                                     : DenseCost(partition, column);
  }

 private:
  double SparseCost(const PartitionRefiner& partition, Vertex column) {
    const auto class_of = partition.class_of();
    const auto sizes = partition.class_sizes();
    if (ones_.size() < sizes.size()) {
      ones_.resize(sizes.size(), 0);
      twos_.resize(sizes.size(), 0);
    }
    touched_.clear();
    auto touch = [&](std::uint32_t cls) {
      if (ones_[cls] == 0 && twos_[cls] == 0) touched_.push_back(cls);
    };
    for (Vertex u : target_->graph()->neighbors(column)) {
      touch(class_of[u]);
      ++ones_[class_of[u]];
    }
    if (target_->kind() == TargetKind::kModifiedAdjacency) {
      touch(class_of[column]);
      ++twos_[class_of[column]];
    }
    double delta = 0.0;
    for (std::uint32_t cls : touched_) {
      const std::size_t s = sizes[cls];
      const std::size_t rest = s - ones_[cls] - twos_[cls];
      delta += (*g_)(rest) + (*g_)(ones_[cls]) + (*g_)(twos_[cls]) - (*g_)(s);
      ones_[cls] = 0;
      twos_[cls] = 0;
    }
    return delta;
  }

  double DenseCost(const PartitionRefiner& partition, Vertex column) {
    const auto class_of = partition.class_of();
    counts_.clear();
    for (Vertex u = 0; u < class_of.size(); ++u) {
      ++counts_[PairKey(class_of[u], target_->value(u, column))];
    }
    double refined = 0.0;
    for (const auto& [key, count] : counts_) refined += (*g_)(count);
    double current = 0.0;
    for (auto s : partition.class_sizes()) current += (*g_)(s);
    return refined - current;
  }

  const ResolvingTarget* target_;
  const XLogX* g_;
  std::vector<std::size_t> ones_;
  std::vector<std::size_t> twos_;
  std::vector<std::uint32_t> touched_;
  std::unordered_map<std::uint64_t, std::size_t> counts_;
};

// Draws without replacement from a fixed pool.
class Urn {
 public:
  explicit Urn(std::vector<Vertex> pool) : pool_(std::move(pool)), remaining_(pool_.size()) {}

  std::size_t remaining() const { return remaining_; }
  Vertex Draw(Rng& rng) {
    const std::size_t j = rng.UniformBelow(remaining_);
    std::swap(pool_[j], pool_[remaining_ - 1]);
    return pool_[--remaining_];
  }

 private:
  std::vector<Vertex> pool_;
  std::size_t remaining_;
};

void CheckLabeling(const Graph& graph, const SbmParams& params) {
  if (static_cast<std::int64_t>(graph.num_vertices()) != params.num_vertices()) {
    throw InvalidInputError("graph has " + std::to_string(graph.num_vertices()) +
                            " vertices but the parameters describe " +
                            std::to_string(params.num_vertices()));
  }
}

// The step shared by the greedy and preorder baselines: the
// community whose next draw lowers f the most, skipping exhausted ones.
std::optional<Community> NextCommunity(const CollisionBound& f, const Allocation& counts,
                                       std::span<const std::size_t> remaining) {
  std::optional<Community> best;
  double best_value = 0.0;
  for (Community i = 0; i < counts.size(); ++i) {
    if (remaining[i] == 0) continue;
    const double value = f(counts.Plus(i).counts());
    if (!best || value < best_value) {
      best = i;
      best_value = value;
    }
  }
  return best;
}

std::vector<Vertex> CommunityMembers(const SbmParams& params, Community i) {
  std::vector<Vertex> members(static_cast<std::size_t>(params.size(i)));
  std::iota(members.begin(), members.end(), params.first_vertex(i));
  return members;
}

}  // namespace

std::string TargetName(TargetKind kind) {
  switch (kind) {
    case TargetKind::kAdjacency:
      return "A";
    case TargetKind::kModifiedAdjacency:
      return "A*";
    case TargetKind::kDistance:
      return "D";
  }
  return "?";
}

ResolvingTarget ResolvingTarget::Adjacency(const Graph& graph) {
  return ResolvingTarget(TargetKind::kAdjacency, &graph, nullptr);
}

ResolvingTarget ResolvingTarget::ModifiedAdjacency(const Graph& graph) {
  return ResolvingTarget(TargetKind::kModifiedAdjacency, &graph, nullptr);
}

ResolvingTarget ResolvingTarget::Distances(const DistanceMatrix& distances) {
  return ResolvingTarget(TargetKind::kDistance, nullptr, &distances);
}

std::size_t ResolvingTarget::size() const {
  return graph_ != nullptr ? graph_->num_vertices() : distances_->size();
}

std::int32_t ResolvingTarget::value(Vertex row, Vertex column) const {
  switch (kind_) {
    case TargetKind::kAdjacency:
      return row != column && graph_->has_edge(row, column) ? 1 : 0;
    case TargetKind::kModifiedAdjacency:
      return row == column ? 2 : (graph_->has_edge(row, column) ? 1 : 0);
    case TargetKind::kDistance:
      return distances_->code(row, column);
  }
  return 0;
}

PartitionRefiner::PartitionRefiner(const ResolvingTarget& target)
    : target_(&target), class_of_(target.size(), 0) {
  if (!class_of_.empty()) {
    class_sizes_.push_back(static_cast<std::uint32_t>(class_of_.size()));
    num_classes_ = 1;
  }
}

void PartitionRefiner::MoveRow(Vertex row, std::uint32_t to) {
  const std::uint32_t from = class_of_[row];
  if (--class_sizes_[from] == 0) --num_classes_;
  if (class_sizes_[to]++ == 0) ++num_classes_;
  class_of_[row] = to;
}

void PartitionRefiner::AddColumn(Vertex column) {
  if (column >= class_of_.size()) {
    throw InvalidInputError("column " + std::to_string(column) + " is out of range");
  }
  std::unordered_map<std::uint64_t, std::uint32_t> fresh;
  auto split = [&](Vertex row, std::int32_t value) {
    const auto key = PairKey(class_of_[row], value);
    auto it = fresh.find(key);
    if (it == fresh.end()) {
      it = fresh.emplace(key, static_cast<std::uint32_t>(class_sizes_.size())).first;
      class_sizes_.push_back(0);
    }
    MoveRow(row, it->second);
  };
  if (IsSparse(target_->kind())) {
    // Only neighbors (value 1) and, for A*, the column's own row (value 2)
    // leave their class; every other row reads 0.
    for (Vertex u : target_->graph()->neighbors(column)) split(u, 1);
    if (target_->kind() == TargetKind::kModifiedAdjacency) split(column, 2);
    return;
  }
  // Distances: relabel every row densely by (class, value).
  std::vector<std::uint32_t> next(class_of_.size());
  std::vector<std::uint32_t> sizes;
  for (Vertex u = 0; u < class_of_.size(); ++u) {
    const auto key = PairKey(class_of_[u], target_->value(u, column));
    auto [it, inserted] = fresh.emplace(key, static_cast<std::uint32_t>(sizes.size()));
    if (inserted) sizes.push_back(0);
    next[u] = it->second;
    ++sizes[it->second];
  }
  class_of_ = std::move(next);
  class_sizes_ = std::move(sizes);
  num_classes_ = class_sizes_.size();
}

bool IsResolving(const ResolvingTarget& target, std::span<const Vertex> set) {
  ValidateSet(target.size(), set);
  PartitionRefiner partition(target);
  for (Vertex v : set) {
    if (partition.discrete()) break;
    partition.AddColumn(v);
  }
  return partition.discrete();
}

BruteForceResult BruteForceMetricDimension(const ResolvingTarget& target, std::size_t cap) {
  const std::size_t n = target.size();
  if (n > cap) {
    throw SizeCapError("brute-force metric dimension refused: n = " + std::to_string(n) +
                       " exceeds the cap of " + std::to_string(cap));
  }
  NodeSet all(n);
  std::iota(all.begin(), all.end(), Vertex{0});
  if (!IsResolving(target, all)) {
    throw NoResolvingSetError("target " + TargetName(target.kind()) +
                              " has identical rows; no column set resolves it");
  }
  for (std::size_t k = 0; k <= n; ++k) {
    NodeSet subset(k);
    std::iota(subset.begin(), subset.end(), Vertex{0});
    while (true) {
      if (IsResolving(target, subset)) return {k, subset};
      // Advance to the next k-combination in lexicographic order.
      std::size_t i = k;
      while (i > 0 && subset[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++subset[i - 1];
      for (std::size_t j = i; j < k; ++j) subset[j] = subset[j - 1] + 1;
    }
  }
  return {n, all};
}

NodeSet InformationContentHeuristic(const ResolvingTarget& target, IchOptions options) {
  const std::size_t n = target.size();
  if (target.kind() == TargetKind::kDistance && n > options.distance_cap &&
      !options.allow_large_distance_target) {
    throw SizeCapError("ICH over a distance matrix with n = " + std::to_string(n) +
                       " exceeds the cap of " + std::to_string(options.distance_cap));
  }
  if (target.kind() != TargetKind::kModifiedAdjacency) {
    NodeSet all(n);
    std::iota(all.begin(), all.end(), Vertex{0});
    if (!IsResolving(target, all)) {
      throw NoResolvingSetError("target " + TargetName(target.kind()) +
                                " has identical rows; no column set resolves it");
    }
  }
  const XLogX g(n);
  SplitScorer scorer(target, g);
  PartitionRefiner partition(target);
  std::vector<bool> chosen(n, false);
  NodeSet out;
  while (!partition.discrete()) {
    std::optional<Vertex> best;
    double best_cost = 0.0;
    for (Vertex v = 0; v < n; ++v) {
      if (chosen[v]) continue;
      const double cost = scorer.Cost(partition, v);
      // Costs of equivalent splits may differ in the last bits depending on
      // summation order; those count as ties and keep the lower id.
      if (!best || cost < best_cost - 1e-9 - 1e-13 * std::abs(best_cost)) {
        best = v;
        best_cost = cost;
      }
    }
    if (!best) throw NoResolvingSetError("every column used without resolving the target");
    chosen[*best] = true;
    out.push_back(*best);
    partition.AddColumn(*best);
  }
  return out;
}

NodeSet GreedyBaseline(const Graph& graph, const SbmParams& params, std::uint64_t seed) {
  CheckLabeling(graph, params);
  const auto target = ResolvingTarget::ModifiedAdjacency(graph);
  PartitionRefiner partition(target);
  const CollisionBound f(params);
  const std::size_t c = params.num_communities();
  Rng rng(seed);
  std::vector<Urn> urns;
  std::vector<std::size_t> remaining(c);
  for (Community i = 0; i < c; ++i) {
    urns.emplace_back(CommunityMembers(params, i));
    remaining[i] = urns.back().remaining();
  }
  Allocation counts = Allocation::Zero(c);
  NodeSet out;
  while (!partition.discrete()) {
    const auto community = NextCommunity(f, counts, remaining);
    if (!community) throw NoResolvingSetError("every vertex used without resolving A*");
    const Vertex v = urns[*community].Draw(rng);
    remaining[*community] = urns[*community].remaining();
    counts = counts.Plus(*community);
    out.push_back(v);
    partition.AddColumn(v);
  }
  return out;
}

std::vector<double> PreorderScores(const Graph& graph, const SbmParams& params) {
  CheckLabeling(graph, params);
  const std::size_t c = params.num_communities();
  std::vector<double> scores(graph.num_vertices(), 0.0);
  std::vector<double> frequency(c);
  for (Vertex w = 0; w < graph.num_vertices(); ++w) {
    std::fill(frequency.begin(), frequency.end(), 0.0);
    for (Vertex u : graph.neighbors(w)) frequency[params.community_of(u)] += 1.0;
    for (Community i = 0; i < c; ++i) frequency[i] /= static_cast<double>(params.size(i));
    double score = 0.0;
    for (Community i = 0; i < c; ++i) {
      for (Community j = i; j < c; ++j) {
        const double r =
            frequency[i] * frequency[j] + (1.0 - frequency[i]) * (1.0 - frequency[j]);
        score += static_cast<double>(params.pair_count(i, j)) * r;
      }
    }
    scores[w] = score;
  }
  return scores;
}

NodeSet PreorderBaseline(const Graph& graph, const SbmParams& params) {
  const auto scores = PreorderScores(graph, params);
  const auto target = ResolvingTarget::ModifiedAdjacency(graph);
  PartitionRefiner partition(target);
  const CollisionBound f(params);
  const std::size_t c = params.num_communities();
  std::vector<std::vector<Vertex>> order(c);
  std::vector<std::size_t> remaining(c);
  for (Community i = 0; i < c; ++i) {
    order[i] = CommunityMembers(params, i);
    std::stable_sort(order[i].begin(), order[i].end(),
                     [&](Vertex a, Vertex b) { return scores[a] < scores[b]; });
    remaining[i] = order[i].size();
  }
  Allocation counts = Allocation::Zero(c);
  NodeSet out;
  while (!partition.discrete()) {
    const auto community = NextCommunity(f, counts, remaining);
    if (!community) throw NoResolvingSetError("every vertex used without resolving A*");
    const Vertex v = order[*community][counts[*community]];
    --remaining[*community];
    counts = counts.Plus(*community);
    out.push_back(v);
    partition.AddColumn(v);
  }
  return out;
}

NodeSet RandomBaseline(const Graph& graph, std::uint64_t seed) {
  const auto target = ResolvingTarget::ModifiedAdjacency(graph);
  PartitionRefiner partition(target);
  std::vector<Vertex> all(graph.num_vertices());
  std::iota(all.begin(), all.end(), Vertex{0});
  Urn urn(std::move(all));
  Rng rng(seed);
  NodeSet out;
  while (!partition.discrete()) {
    if (urn.remaining() == 0) throw NoResolvingSetError("every vertex used without resolving A*");
    const Vertex v = urn.Draw(rng);
    out.push_back(v);
    partition.AddColumn(v);
  }
  return out;
}

NodeSet DrawAllocation(const SbmParams& params, const Allocation& allocation, Rng& rng) {
  if (allocation.size() != params.num_communities()) {
    throw InvalidInputError("allocation length differs from the community count");
  }
  NodeSet out;
  out.reserve(static_cast<std::size_t>(allocation.level()));
  for (Community i = 0; i < allocation.size(); ++i) {
    const auto size = static_cast<std::uint64_t>(params.size(i));
    const auto k = static_cast<std::uint64_t>(allocation[i]);
    if (k > size) {
      throw InvalidInputError("allocation asks for " + std::to_string(k) + " nodes from a " +
                              "community of " + std::to_string(size));
    }
    // Floyd's sampling: k distinct offsets in O(k).
    std::unordered_set<std::uint64_t> picked;
    for (std::uint64_t j = size - k; j < size; ++j) {
      const std::uint64_t t = rng.UniformBelow(j + 1);
      const std::uint64_t offset = picked.insert(t).second ? t : (picked.insert(j), j);
      out.push_back(params.first_vertex(i) + static_cast<Vertex>(offset));
    }
  }
  return out;
}

Embedding Embed(const DistanceMatrix& distances, std::span<const Vertex> set,
                std::optional<double> unreachable_value) {
  ValidateSet(distances.size(), set);
  Embedding out{distances.size(), set.size(), {}};
  out.values.reserve(out.rows * out.cols);
  for (Vertex v = 0; v < out.rows; ++v) {
    for (Vertex r : set) {
      const Distance d = distances.at(v, r);
      if (d.reachable()) {
        out.values.push_back(static_cast<double>(d.hops()));
      } else if (unreachable_value) {
        out.values.push_back(*unreachable_value);
      } else {
        throw InvalidInputError("vertex " + std::to_string(v) + " cannot reach landmark " +
                                std::to_string(r));
      }
    }
  }
  return out;
}

}  // namespace resolvekit
