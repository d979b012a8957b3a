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

#ifndef RESOLVEKIT_HARNESS_H_
#define RESOLVEKIT_HARNESS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "resolvekit/sbm.h"

namespace resolvekit {

enum class Method { kMine, kIch, kGreedy, kPreorder, kRandom };

// "MINE", "ICH", "Greedy", "Preorder", "Random".
std::string MethodName(Method method);
// Case-insensitive inverse of MethodName.
std::optional<Method> ParseMethod(std::string_view name);

// Block model fitted to a real network, at its original size.
struct NetworkPreset {
  std::string key;           // e.g. "karate"
  std::string display_name;  // e.g. "Karate Club"
  SbmParams params;
};

// Political blogs, political books, karate club, David Copperfield and the
// primary school network, in that order.
const std::vector<NetworkPreset>& Presets();
// Throws InvalidInputError for an unknown key.
const NetworkPreset& FindPreset(std::string_view key);

struct ExperimentConfig {
  ExperimentConfig(std::string network_name, SbmParams sbm)
      : network(std::move(network_name)), params(std::move(sbm)) {}

  std::string network;
  // Already scaled to the target size.
  SbmParams params;
  std::vector<Method> methods{Method::kMine, Method::kIch, Method::kGreedy, Method::kPreorder,
                              Method::kRandom};
  std::vector<double> alphas{0.005, 0.01, 0.1, 0.2};
  std::size_t n_graphs = 30;
  // Draws per graph for the randomized methods (MINE selections, greedy,
  // random). ICH and preorder are deterministic and run once per graph.
  std::size_t replicates = 50;
  std::size_t ich_replicates = 10;
  std::uint64_t base_seed = 0;

  // Throws InvalidInputError on zero counts or an alpha outside (0, 1).
  void Validate() const;
};

// One method run on one graph.
struct RunRecord {
  Method method = Method::kMine;
  std::optional<double> alpha;
  std::size_t graph = 0;
  std::size_t replicate = 0;
  std::uint64_t seed = 0;
  std::size_t size = 0;
  // The set resolved A*.
  bool valid = false;
  double seconds = 0.0;
  // Non-empty when the method threw; such runs count as failures.
  std::string error;
};

// Population (divisor N) mean and standard deviation.
struct MeanStd {
  double mean = 0.0;
  double std = 0.0;
};

MeanStd Summarize(std::span<const double> values);

struct ReportCell {
  Method method = Method::kMine;
  std::optional<double> alpha;
  MeanStd size;
  MeanStd seconds;
  std::size_t runs = 0;
  std::size_t valid_runs = 0;
  std::size_t failures = 0;
  // MINE: the fixed allocation for this alpha.
  std::vector<std::int64_t> allocation;

  double validity_rate() const {
    return runs == 0 ? 0.0 : static_cast<double>(valid_runs) / static_cast<double>(runs);
  }
};

struct ExperimentReport {
  std::string network;
  std::string config_hash;
  std::uint64_t base_seed = 0;
  std::vector<std::uint64_t> graph_seeds;
  std::vector<ReportCell> cells;
  std::vector<RunRecord> runs;
};

// Seed of graph `index`: DeriveSeed(base, 0, index, 0).
std::uint64_t GraphSeed(std::uint64_t base_seed, std::size_t index);

// Samples cfg.n_graphs graphs and runs every selected method on each.
// MINE is solved once per alpha; its replicates draw the allocation at
// random within communities and record whether the draw resolves A*.
// Method errors become failure counts, never aborts. Identical configs give
// identical reports apart from timings.
ExperimentReport RunExperiment(const ExperimentConfig& config);

struct LongPathResult {
  std::vector<double> per_graph;  // empirical fraction of pairs at distance > 2
  MeanStd empirical;
  double analytic = 0.0;  // ExpectedLongPairs(params).fraction
  bool analytic_only = false;
};

// Fraction of vertex pairs at distance > 2 on the experiment's graphs,
// alongside the analytic estimate. Above `vertex_cap` only the analytic
// value is produced.
LongPathResult LongPathFraction(const ExperimentConfig& config, std::size_t vertex_cap = 5000);

// Tables ---------------------------------------------------------------

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  friend bool operator==(const Table&, const Table&) = default;
};

enum class TableFormat { kCsv, kJson, kMarkdown };

// Two-decimal rounding with trailing zeros dropped, keeping one decimal:
// (82, 0) -> "82.0 ± 0.0", (84.966, 0.18) -> "84.97 ± 0.18".
std::string FormatMeanStd(const MeanStd& value);
std::string FormatNumber(double value);

// Rows are networks; columns "Network" then one per (method, alpha) cell in
// first-appearance order. Missing cells read "-".
Table SizeTable(std::span<const ExperimentReport> reports);
Table TimeTable(std::span<const ExperimentReport> reports);
// MINE cells only, columns "α=<alpha>".
Table MineSizeTable(std::span<const ExperimentReport> reports);
Table MineTimeTable(std::span<const ExperimentReport> reports);
// Non-MINE cells only, one column per method.
Table BaselineSizeTable(std::span<const ExperimentReport> reports);
Table BaselineTimeTable(std::span<const ExperimentReport> reports);

struct NamedLongPath {
  std::string network;
  LongPathResult result;
};
Table LongPathTable(std::span<const NamedLongPath> results);

std::string EmitTable(const Table& table, TableFormat format);
// Size table of a single report.
std::string EmitTables(const ExperimentReport& report, TableFormat format);
// Inverse of EmitTable(..., kCsv). Throws InvalidInputError on malformed
// quoting.
Table ParseCsvTable(std::string_view csv);

}  // namespace resolvekit

#endif  // RESOLVEKIT_HARNESS_H_
