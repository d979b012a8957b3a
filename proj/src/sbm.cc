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

#include "resolvekit/sbm.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "resolvekit/error.h"
#include "resolvekit/parallel.h"
#include "resolvekit/rng.h"

namespace resolvekit {
namespace {

std::string Entry(std::size_t i, std::size_t j, double value) {
  std::ostringstream out;
  out << "P[" << i << "][" << j << "] = " << value;
  return out.str();
}

}  // namespace

SbmParams::SbmParams(std::vector<std::int64_t> community_sizes,
                     std::vector<std::vector<double>> probabilities)
    : sizes_(std::move(community_sizes)), probabilities_(std::move(probabilities)) {
  const std::size_t c = sizes_.size();
  if (c == 0) throw InvalidInputError("SBM needs at least one community");
  if (probabilities_.size() != c) {
    throw InvalidInputError("P has " + std::to_string(probabilities_.size()) +
                            " rows for " + std::to_string(c) + " communities");
  }
  for (std::size_t i = 0; i < c; ++i) {
    if (sizes_[i] < 1) {
      throw InvalidInputError("community_sizes[" + std::to_string(i) + "] = " +
                              std::to_string(sizes_[i]) + " must be >= 1");
    }
    if (probabilities_[i].size() != c) {
      throw InvalidInputError("P row " + std::to_string(i) + " has " +
                              std::to_string(probabilities_[i].size()) + " entries, expected " +
                              std::to_string(c));
    }
  }
  for (std::size_t i = 0; i < c; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      const double v = probabilities_[i][j];
      if (!(v >= 0.0 && v <= 1.0)) {
        throw InvalidInputError(Entry(i, j, v) + " is outside [0, 1]");
      }
      if (v != probabilities_[j][i]) {
        throw InvalidInputError(Entry(i, j, v) + " differs from " +
                                Entry(j, i, probabilities_[j][i]) + "; P must be symmetric");
      }
    }
  }
  offsets_.assign(c + 1, 0);
  for (std::size_t i = 0; i < c; ++i) offsets_[i + 1] = offsets_[i] + sizes_[i];
  total_ = offsets_[c];
}

std::int64_t SbmParams::pair_count(Community i, Community j) const {
  if (i == j) return sizes_[i] * (sizes_[i] - 1) / 2;
  return sizes_[i] * sizes_[j];
}

Community SbmParams::community_of(Vertex v) const {
  const auto it = std::upper_bound(offsets_.begin(), offsets_.end(), static_cast<std::int64_t>(v));
  return static_cast<Community>(it - offsets_.begin() - 1);
}

std::vector<std::uint32_t> SbmParams::labels() const {
  std::vector<std::uint32_t> out(static_cast<std::size_t>(total_));
  for (std::size_t i = 0; i < sizes_.size(); ++i) {
    std::fill(out.begin() + offsets_[i], out.begin() + offsets_[i + 1],
              static_cast<std::uint32_t>(i));
  }
  return out;
}

std::size_t LabeledGraph::Validate() const {
  if (labels.size() != graph.num_vertices()) {
    throw InvalidInputError("label count " + std::to_string(labels.size()) +
                            " differs from vertex count " +
                            std::to_string(graph.num_vertices()));
  }
  if (labels.empty()) throw InvalidInputError("labeled graph has no vertices");
  const std::size_t c = *std::max_element(labels.begin(), labels.end()) + 1;
  std::vector<bool> seen(c, false);
  for (auto label : labels) seen[label] = true;
  for (std::size_t i = 0; i < c; ++i) {
    if (!seen[i]) throw InvalidInputError("community " + std::to_string(i) + " has no members");
  }
  return c;
}

Graph SampleSbm(const SbmParams& params, std::uint64_t seed) {
  const auto n = static_cast<std::size_t>(params.num_vertices());
  const auto labels = params.labels();
  std::vector<std::vector<Edge>> rows(n);
  ParallelFor(n, [&](std::size_t u) {
    const auto& p_row = params.matrix()[labels[u]];
    auto& out = rows[u];
    for (std::size_t v = u + 1; v < n; ++v) {
      if (ToUnitInterval(CounterBits(seed, u, v)) < p_row[labels[v]]) {
        out.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
      }
    }
  });
  std::vector<Edge> edges;
  std::size_t total = 0;
  for (const auto& row : rows) total += row.size();
  edges.reserve(total);
  for (auto& row : rows) {
    edges.insert(edges.end(), row.begin(), row.end());
    std::vector<Edge>().swap(row);
  }
  return BuildGraph(n, edges);
}

ParamsEstimate EstimateParams(const LabeledGraph& labeled) {
  const std::size_t c = labeled.Validate();
  std::vector<std::int64_t> sizes(c, 0);
  for (auto label : labeled.labels) ++sizes[label];
  std::vector<std::vector<double>> edge_counts(c, std::vector<double>(c, 0.0));
  for (const auto& [u, v] : labeled.graph.edges()) {
    const auto a = labeled.labels[u];
    const auto b = labeled.labels[v];
    edge_counts[a][b] += 1.0;
    if (a != b) edge_counts[b][a] += 1.0;
  }
  std::vector<std::string> warnings;
  std::vector<std::vector<double>> p(c, std::vector<double>(c, 0.0));
  for (std::size_t i = 0; i < c; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      const double pairs = i == j ? static_cast<double>(sizes[i] * (sizes[i] - 1) / 2)
                                  : static_cast<double>(sizes[i] * sizes[j]);
      if (pairs == 0.0) {
        if (i == j) {
          warnings.push_back("community " + std::to_string(i) +
                             " has a single member; P(" + std::to_string(i) + ", " +
                             std::to_string(i) + ") set to 0");
        }
        continue;
      }
      p[i][j] = edge_counts[i][j] / pairs;
    }
  }
  return {SbmParams(std::move(sizes), std::move(p)), std::move(warnings)};
}

SbmParams ScaleCommunities(const SbmParams& params, std::int64_t n_target) {
  const std::size_t c = params.num_communities();
  if (n_target < static_cast<std::int64_t>(c)) {
    throw InvalidInputError("target size " + std::to_string(n_target) + " is below the " +
                            std::to_string(c) + " communities");
  }
  const std::int64_t n = params.num_vertices();
  std::vector<std::int64_t> sizes(c);
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < c; ++i) {
    // Round half up in exact integer arithmetic: floor((2ab + n) / 2n).
    const __int128 numerator = static_cast<__int128>(2) * n_target * params.size(i) + n;
    sizes[i] = static_cast<std::int64_t>(numerator / (2 * static_cast<__int128>(n)));
    sum += sizes[i];
  }
  if (sum != n_target) {
    const auto largest = std::max_element(sizes.begin(), sizes.end()) - sizes.begin();
    sizes[largest] += n_target - sum;
  }
  for (std::size_t i = 0; i < c; ++i) {
    if (sizes[i] < 1) {
      throw InvalidInputError("community " + std::to_string(i) + " scales to size " +
                              std::to_string(sizes[i]) + " at n = " + std::to_string(n_target));
    }
  }
  return SbmParams(std::move(sizes), params.matrix());
}

double PairAgreementProbability(const SbmParams& params, Community i, Community j, Community l) {
  const double a = params.p(i, l);
  const double b = params.p(j, l);
  return a * b + (1.0 - a) * (1.0 - b);
}

CollisionBound::CollisionBound(const SbmParams& params)
    : c_(params.num_communities()), pair_counts_(c_ * c_, 0.0), log_r_(c_ * c_ * c_, 0.0) {
  for (std::size_t i = 0; i < c_; ++i) {
    for (std::size_t j = i; j < c_; ++j) {
      pair_counts_[i * c_ + j] = static_cast<double>(params.pair_count(i, j));
      for (std::size_t l = 0; l < c_; ++l) {
        const double r = PairAgreementProbability(params, i, j, l);
        log_r_[(i * c_ + j) * c_ + l] =
            r > 0.0 ? std::log(r) : -std::numeric_limits<double>::infinity();
      }
    }
  }
}

double CollisionBound::operator()(std::span<const std::int64_t> k) const {
  if (k.size() != c_) {
    throw InvalidInputError("allocation has " + std::to_string(k.size()) + " entries, expected " +
                            std::to_string(c_));
  }
  double total = 0.0;
  for (std::size_t i = 0; i < c_; ++i) {
    for (std::size_t j = i; j < c_; ++j) {
      const double s = pair_counts_[i * c_ + j];
      if (s == 0.0) continue;
      const double* log_r = &log_r_[(i * c_ + j) * c_];
      double exponent = 0.0;
      bool vanishes = false;
      for (std::size_t l = 0; l < c_; ++l) {
        if (k[l] < 0) throw InvalidInputError("allocation entries must be >= 0");
        if (k[l] == 0) continue;
        if (std::isinf(log_r[l])) {
          vanishes = true;
          break;
        }
        exponent += static_cast<double>(k[l]) * log_r[l];
      }
      if (!vanishes) total += s * std::exp(exponent);
    }
  }
  return total;
}

double ExpectedCollisions(const SbmParams& params, std::span<const std::int64_t> k) {
  return CollisionBound(params)(k);
}

LongPairEstimate ExpectedLongPairs(const SbmParams& params) {
  const std::size_t c = params.num_communities();
  LongPairEstimate out;
  out.per_block.assign(c, std::vector<double>(c, 0.0));
  for (std::size_t i = 0; i < c; ++i) {
    for (std::size_t j = i; j < c; ++j) {
      const double s = static_cast<double>(params.pair_count(i, j));
      if (s == 0.0 || params.p(i, j) == 1.0) continue;
      double log_product = 0.0;
      bool vanishes = false;
      for (std::size_t k = 0; k < c; ++k) {
        const std::int64_t exponent =
            params.size(k) - (i == k ? 1 : 0) - (j == k ? 1 : 0);
        if (exponent <= 0) continue;
        const double q = params.p(i, k) * params.p(k, j);
        if (q >= 1.0) {
          vanishes = true;
          break;
        }
        log_product += static_cast<double>(exponent) * std::log1p(-q);
      }
      if (!vanishes) out.per_block[i][j] = s * (1.0 - params.p(i, j)) * std::exp(log_product);
      out.total += out.per_block[i][j];
    }
  }
  const double n = static_cast<double>(params.num_vertices());
  out.fraction = n >= 2 ? out.total / (n * (n - 1) / 2) : 0.0;
  return out;
}

DiameterTwoReport DiameterTwoCondition(const SbmParams& params, double constant) {
  if (!(constant > 1.0)) throw InvalidInputError("diameter-two condition needs C > 1");
  const std::size_t c = params.num_communities();
  DiameterTwoReport report;
  report.constant = constant;
  for (std::size_t i = 0; i < c; ++i) {
    for (std::size_t j = i; j < c; ++j) {
      if (!(static_cast<double>(params.pair_count(i, j)) * (1.0 - params.p(i, j)) > 0.0)) continue;
      BlockCondition block{i, j, 0.0, 0.0, false};
      for (std::size_t k = 0; k < c; ++k) {
        block.lhs += static_cast<double>(params.size(k)) * params.p(i, k) * params.p(k, j);
      }
      block.rhs = constant * std::log(static_cast<double>(params.size(i)) *
                                      static_cast<double>(params.size(j)));
      block.holds = block.lhs >= block.rhs;
      report.holds = report.holds && block.holds;
      report.pairs.push_back(block);
    }
  }
  return report;
}

DiameterAboveTwoReport DiameterAboveTwoCondition(const SbmParams& params, double constant) {
  if (!(constant > 0.0 && constant < 1.0)) {
    throw InvalidInputError("diameter-above-two condition needs 0 < C < 1");
  }
  const std::size_t c = params.num_communities();
  const double n = static_cast<double>(params.num_vertices());
  const double log_term = constant * std::log(n * n);
  DiameterAboveTwoReport report;
  report.constant = constant;
  for (std::size_t i = 0; i < c && !report.holds; ++i) {
    double self = 0.0;
    for (std::size_t k = 0; k < c; ++k) {
      self += static_cast<double>(params.size(k)) * params.p(i, k) * params.p(i, k);
    }
    for (std::size_t j = 0; j < c; ++j) {
      if (self <= log_term) {
        report.holds = true;
        report.witness = DiameterAboveTwoWitness{i, j, 'a', self, log_term};
        break;
      }
      double cross = 0.0;
      double column_max = 0.0;
      for (std::size_t k = 0; k < c; ++k) {
        cross += static_cast<double>(params.size(k)) * params.p(i, k) * params.p(k, j);
        column_max = std::max(column_max, params.p(k, j));
      }
      const double rhs = log_term + std::log1p(-params.p(i, j));
      if (cross <= rhs && column_max <= 0.5) {
        report.holds = true;
        report.witness = DiameterAboveTwoWitness{i, j, 'b', cross, rhs};
        break;
      }
    }
  }
  return report;
}

namespace {

std::int64_t ErdosRenyiBound(double factor, std::int64_t n, double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw InvalidInputError("edge probability must lie strictly between 0 and 1");
  }
  if (n < 1) throw InvalidInputError("vertex count must be >= 1");
  const double r = p * p + (1.0 - p) * (1.0 - p);
  return static_cast<std::int64_t>(
      std::ceil(-factor * std::log(static_cast<double>(n)) / std::log(r)));
}

}  // namespace

std::int64_t ErdosRenyiBetaUpper(std::int64_t n, double p) { return ErdosRenyiBound(2.0, n, p); }

std::int64_t ErdosRenyiAnySetSize(std::int64_t n, double p) {
  return ErdosRenyiBound(3.0, n, p);
}

}  // namespace resolvekit
