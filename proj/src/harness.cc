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

#include "resolvekit/harness.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "resolvekit/error.h"
#include "resolvekit/json_io.h"
#include "resolvekit/mine.h"
#include "resolvekit/parallel.h"
#include "resolvekit/resolvers.h"
#include "resolvekit/rng.h"

namespace resolvekit {
namespace {

// Seed streams for DeriveSeed; MINE uses one stream per alpha index.
constexpr std::uint64_t kSampleStream = 0;
constexpr std::uint64_t kMineStreamBase = 100;

std::uint64_t MethodStream(Method method) { return static_cast<std::uint64_t>(method) + 1; }

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double Seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

std::string Lower(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  return out;
}

bool IsDeterministic(Method method) {
  return method == Method::kIch || method == Method::kPreorder;
}

void RunMine(const ExperimentConfig& config, const Graph& graph, std::size_t g,
             std::vector<RunRecord>& out) {
  const auto target = ResolvingTarget::ModifiedAdjacency(graph);
  for (std::size_t a = 0; a < config.alphas.size(); ++a) {
    const double alpha = config.alphas[a];
    std::optional<MineSolution> solution;
    std::string error;
    const Stopwatch clock;
    try {
      solution = Mine(config.params, alpha);
    } catch (const Error& e) {
      error = e.what();
    }
    const double seconds = clock.Seconds();
    for (std::size_t rep = 0; rep < config.replicates; ++rep) {
      RunRecord record;
      record.method = Method::kMine;
      record.alpha = alpha;
      record.graph = g;
      record.replicate = rep;
      record.seed = DeriveSeed(config.base_seed, kMineStreamBase + a, g, rep);
      record.seconds = seconds;
      if (!solution) {
        record.error = error;
      } else {
        Rng rng(record.seed);
        const NodeSet set = DrawAllocation(config.params, solution->allocation, rng);
        record.size = set.size();
        record.valid = IsResolving(target, set);
      }
      out.push_back(std::move(record));
    }
  }
}

void RunBaseline(const ExperimentConfig& config, Method method, const Graph& graph,
                 std::size_t g, std::vector<RunRecord>& out) {
  std::size_t replicates = IsDeterministic(method) ? 1 : config.replicates;
  if (method == Method::kIch && g >= config.ich_replicates) replicates = 0;
  const auto target = ResolvingTarget::ModifiedAdjacency(graph);
  for (std::size_t rep = 0; rep < replicates; ++rep) {
    RunRecord record;
    record.method = method;
    record.graph = g;
    record.replicate = rep;
    record.seed = DeriveSeed(config.base_seed, MethodStream(method), g, rep);
    const Stopwatch clock;
    try {
      NodeSet set;
      switch (method) {
        case Method::kIch:
          set = InformationContentHeuristic(target);
          break;
        case Method::kGreedy:
          set = GreedyBaseline(graph, config.params, record.seed);
          break;
        case Method::kPreorder:
          set = PreorderBaseline(graph, config.params);
          break;
        case Method::kRandom:
          set = RandomBaseline(graph, record.seed);
          break;
        case Method::kMine:
          break;
      }
      record.seconds = clock.Seconds();
      record.size = set.size();
      record.valid = IsResolving(target, set);
    } catch (const Error& e) {
      record.seconds = clock.Seconds();
      record.error = e.what();
    }
    out.push_back(std::move(record));
  }
}

ReportCell Aggregate(Method method, std::optional<double> alpha,
                     const std::vector<RunRecord>& runs) {
  ReportCell cell;
  cell.method = method;
  cell.alpha = alpha;
  std::vector<double> sizes;
  std::vector<double> seconds;
  for (const auto& run : runs) {
    if (run.method != method || run.alpha != alpha) continue;
    ++cell.runs;
    if (!run.error.empty()) {
      ++cell.failures;
      continue;
    }
    if (run.valid) ++cell.valid_runs;
    sizes.push_back(static_cast<double>(run.size));
    seconds.push_back(run.seconds);
  }
  cell.size = Summarize(sizes);
  cell.seconds = Summarize(seconds);
  return cell;
}

std::string CellLabel(const ReportCell& cell, bool with_method) {
  if (!cell.alpha) return MethodName(cell.method);
  char text[32];
  std::snprintf(text, sizeof(text), "%g", *cell.alpha);
  const std::string alpha = std::string("α=") + text;
  return with_method ? MethodName(cell.method) + " " + alpha : alpha;
}

template <typename Select, typename Value>
Table BuildTable(std::span<const ExperimentReport> reports, Select select, Value value,
                 bool with_method) {
  Table table;
  table.header.push_back("Network");
  std::vector<std::string> columns;
  for (const auto& report : reports) {
    for (const auto& cell : report.cells) {
      if (!select(cell)) continue;
      const auto label = CellLabel(cell, with_method);
      if (std::find(columns.begin(), columns.end(), label) == columns.end()) {
        columns.push_back(label);
      }
    }
  }
  table.header.insert(table.header.end(), columns.begin(), columns.end());
  for (const auto& report : reports) {
    std::vector<std::string> row(table.header.size(), "-");
    row[0] = report.network;
    for (const auto& cell : report.cells) {
      if (!select(cell)) continue;
      const auto it = std::find(columns.begin(), columns.end(), CellLabel(cell, with_method));
      row[1 + static_cast<std::size_t>(it - columns.begin())] = value(cell);
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::string SizeText(const ReportCell& cell) {
  return cell.runs == cell.failures ? "-" : FormatMeanStd(cell.size);
}
std::string TimeText(const ReportCell& cell) {
  return cell.runs == cell.failures ? "-" : FormatMeanStd(cell.seconds);
}
bool AnyCell(const ReportCell&) { return true; }
bool MineCell(const ReportCell& cell) { return cell.method == Method::kMine; }
bool BaselineCell(const ReportCell& cell) { return cell.method != Method::kMine; }

std::string CsvField(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string MethodName(Method method) {
  switch (method) {
    case Method::kMine:
      return "MINE";
    case Method::kIch:
      return "ICH";
    case Method::kGreedy:
      return "Greedy";
    case Method::kPreorder:
      return "Preorder";
    case Method::kRandom:
      return "Random";
  }
  return "?";
}

std::optional<Method> ParseMethod(std::string_view name) {
  const std::string key = Lower(name);
  for (Method m : {Method::kMine, Method::kIch, Method::kGreedy, Method::kPreorder,
                   Method::kRandom}) {
    if (Lower(MethodName(m)) == key) return m;
  }
  return std::nullopt;
}

const std::vector<NetworkPreset>& Presets() {
  static const std::vector<NetworkPreset> presets = {
      {"political-blogs", "Political Blogs",
       SbmParams({586, 636}, {{0.043, 0.004}, {0.004, 0.039}})},
      // The fitted matrix lists 0.006 above and 0.005 below the diagonal;
      // the upper value is used for both.
      {"political-books", "Political Books",
       SbmParams({49, 43, 13},
                 {{0.162, 0.006, 0.053}, {0.006, 0.190, 0.043}, {0.053, 0.043, 0.115}})},
      {"karate", "Karate Club", SbmParams({17, 17}, {{0.257, 0.038}, {0.038, 0.228}})},
      {"copperfield", "David Copperfield",
       SbmParams({58, 54}, {{0.063, 0.098}, {0.098, 0.010}})},
      {"primary-school", "Primary School",
       SbmParams({110, 112, 14},
                 {{0.198, 0.204, 0.160}, {0.204, 0.268, 0.166}, {0.160, 0.166, 0.297}})},
  };
  return presets;
}

const NetworkPreset& FindPreset(std::string_view key) {
  for (const auto& preset : Presets()) {
    if (preset.key == key) return preset;
  }
  std::string known;
  for (const auto& preset : Presets()) known += (known.empty() ? "" : ", ") + preset.key;
  throw InvalidInputError("unknown preset '" + std::string(key) + "' (known: " + known + ")");
}

void ExperimentConfig::Validate() const {
  if (methods.empty()) throw InvalidInputError("experiment selects no methods");
  if (n_graphs < 1) throw InvalidInputError("n_graphs must be >= 1");
  if (replicates < 1 || ich_replicates < 1) {
    throw InvalidInputError("replicate counts must be >= 1");
  }
  const bool uses_mine = std::find(methods.begin(), methods.end(), Method::kMine) != methods.end();
  if (uses_mine && alphas.empty()) throw InvalidInputError("MINE selected without alphas");
  for (double alpha : alphas) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
      throw InvalidInputError("alpha must lie in (0, 1), got " + std::to_string(alpha));
    }
  }
}

MeanStd Summarize(std::span<const double> values) {
  if (values.empty()) return {};
  double sum = 0.0;
  for (double v : values) sum += v;
  const double mean = sum / static_cast<double>(values.size());
  double squares = 0.0;
  for (double v : values) squares += (v - mean) * (v - mean);
  return {mean, std::sqrt(squares / static_cast<double>(values.size()))};
}

std::uint64_t GraphSeed(std::uint64_t base_seed, std::size_t index) {
  return DeriveSeed(base_seed, kSampleStream, index, 0);
}

ExperimentReport RunExperiment(const ExperimentConfig& config) {
  config.Validate();
  ExperimentReport report;
  report.network = config.network;
  report.config_hash = ConfigHash(config);
  report.base_seed = config.base_seed;
  for (std::size_t g = 0; g < config.n_graphs; ++g) {
    report.graph_seeds.push_back(GraphSeed(config.base_seed, g));
  }

  std::vector<std::vector<RunRecord>> per_graph(config.n_graphs);
  ParallelFor(config.n_graphs, [&](std::size_t g) {
    const Graph graph = SampleSbm(config.params, report.graph_seeds[g]);
    for (Method method : config.methods) {
      if (method == Method::kMine) {
        RunMine(config, graph, g, per_graph[g]);
      } else {
        RunBaseline(config, method, graph, g, per_graph[g]);
      }
    }
  });
  for (auto& runs : per_graph) {
    report.runs.insert(report.runs.end(), std::make_move_iterator(runs.begin()),
                       std::make_move_iterator(runs.end()));
  }

  for (Method method : config.methods) {
    if (method != Method::kMine) {
      report.cells.push_back(Aggregate(method, std::nullopt, report.runs));
      continue;
    }
    for (double alpha : config.alphas) {
      ReportCell cell = Aggregate(method, alpha, report.runs);
      try {
        const auto solution = Mine(config.params, alpha);
        cell.allocation.assign(solution.allocation.counts().begin(),
                               solution.allocation.counts().end());
      } catch (const Error&) {
        // Infeasible: already counted as failures.
      }
      report.cells.push_back(std::move(cell));
    }
  }
  return report;
}

LongPathResult LongPathFraction(const ExperimentConfig& config, std::size_t vertex_cap) {
  LongPathResult result;
  result.analytic = ExpectedLongPairs(config.params).fraction;
  const auto n = static_cast<std::size_t>(config.params.num_vertices());
  if (n > vertex_cap || n < 2) {
    result.analytic_only = true;
    return result;
  }
  const double pairs = static_cast<double>(n) * static_cast<double>(n - 1) / 2.0;
  result.per_graph.assign(config.n_graphs, 0.0);
  for (std::size_t g = 0; g < config.n_graphs; ++g) {
    const Graph graph = SampleSbm(config.params, GraphSeed(config.base_seed, g));
    result.per_graph[g] = static_cast<double>(CountPairsBeyondDistanceTwo(graph)) / pairs;
  }
  result.empirical = Summarize(result.per_graph);
  return result;
}

std::string FormatNumber(double value) {
  char buffer[64];
  double rounded = std::round(value * 100.0) / 100.0;
  if (rounded == 0.0) rounded = 0.0;  // drop the sign of -0
  std::snprintf(buffer, sizeof(buffer), "%.2f", rounded);
  std::string text(buffer);
  if (text.find('.') != std::string::npos) {
    while (text.back() == '0' && text[text.size() - 2] != '.') text.pop_back();
  }
  return text;
}

std::string FormatMeanStd(const MeanStd& value) {
  return FormatNumber(value.mean) + " ± " + FormatNumber(value.std);
}

Table SizeTable(std::span<const ExperimentReport> reports) {
  return BuildTable(reports, AnyCell, SizeText, true);
}
Table TimeTable(std::span<const ExperimentReport> reports) {
  return BuildTable(reports, AnyCell, TimeText, true);
}
Table MineSizeTable(std::span<const ExperimentReport> reports) {
  return BuildTable(reports, MineCell, SizeText, false);
}
Table MineTimeTable(std::span<const ExperimentReport> reports) {
  return BuildTable(reports, MineCell, TimeText, false);
}
Table BaselineSizeTable(std::span<const ExperimentReport> reports) {
  return BuildTable(reports, BaselineCell, SizeText, true);
}
Table BaselineTimeTable(std::span<const ExperimentReport> reports) {
  return BuildTable(reports, BaselineCell, TimeText, true);
}

Table LongPathTable(std::span<const NamedLongPath> results) {
  Table table;
  table.header = {"Network", "Empirical fraction > 2", "Analytic E(W)/C(n,2)"};
  for (const auto& entry : results) {
    // Fractions span many orders of magnitude, so these use significant
    // digits rather than the fixed two decimals of the size tables.
    char analytic[64];
    std::snprintf(analytic, sizeof(analytic), "%.3e", entry.result.analytic);
    char empirical[96];
    std::snprintf(empirical, sizeof(empirical), "%.4g ± %.2g", entry.result.empirical.mean,
                  entry.result.empirical.std);
    table.rows.push_back(
        {entry.network, entry.result.analytic_only ? "-" : std::string(empirical), analytic});
  }
  return table;
}

std::string EmitTable(const Table& table, TableFormat format) {
  std::ostringstream out;
  switch (format) {
    case TableFormat::kCsv: {
      auto line = [&](const std::vector<std::string>& fields) {
        for (std::size_t i = 0; i < fields.size(); ++i) {
          out << (i ? "," : "") << CsvField(fields[i]);
        }
        out << '\n';
      };
      line(table.header);
      for (const auto& row : table.rows) line(row);
      break;
    }
    case TableFormat::kJson:
      out << TableToJson(table).dump(2) << '\n';
      break;
    case TableFormat::kMarkdown: {
      auto line = [&](const std::vector<std::string>& fields) {
        out << '|';
        for (const auto& field : fields) out << ' ' << field << " |";
        out << '\n';
      };
      line(table.header);
      out << '|';
      for (std::size_t i = 0; i < table.header.size(); ++i) out << " --- |";
      out << '\n';
      for (const auto& row : table.rows) line(row);
      break;
    }
  }
  return out.str();
}

std::string EmitTables(const ExperimentReport& report, TableFormat format) {
  if (report.cells.empty()) return EmitTable(Table{{"Network"}, {}}, format);
  return EmitTable(SizeTable(std::span<const ExperimentReport>(&report, 1)), format);
}

Table ParseCsvTable(std::string_view csv) {
  std::vector<std::vector<std::string>> lines;
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  bool field_started = false;
  for (std::size_t i = 0; i < csv.size(); ++i) {
    const char ch = csv[i];
    if (quoted) {
      if (ch == '"') {
        if (i + 1 < csv.size() && csv[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += ch;
      }
      continue;
    }
    if (ch == '"' && field.empty() && !field_started) {
      quoted = true;
      field_started = true;
    } else if (ch == ',') {
      fields.push_back(std::move(field));
      field.clear();
      field_started = false;
    } else if (ch == '\n') {
      fields.push_back(std::move(field));
      field.clear();
      field_started = false;
      lines.push_back(std::move(fields));
      fields.clear();
    } else if (ch == '"') {
      throw InvalidInputError("stray quote in CSV field");
    } else {
      field += ch;
      field_started = true;
    }
  }
  if (quoted) throw InvalidInputError("unterminated quoted CSV field");
  if (field_started || !fields.empty()) {
    fields.push_back(std::move(field));
    lines.push_back(std::move(fields));
  }
  Table table;
  if (lines.empty()) return table;
  table.header = std::move(lines.front());
  table.rows.assign(std::make_move_iterator(lines.begin() + 1),
                    std::make_move_iterator(lines.end()));
  return table;
}

}  // namespace resolvekit
