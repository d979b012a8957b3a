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

// resolvekit: command-line front end. JSON results go to stdout, a short
// human summary to stderr. Exit codes follow resolvekit::ErrorCode.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "resolvekit/error.h"
#include "resolvekit/graph.h"
#include "resolvekit/harness.h"
#include "resolvekit/json_io.h"
#include "resolvekit/mine.h"
#include "resolvekit/resolvers.h"
#include "resolvekit/sbm.h"
#include "resolvekit/version.h"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace resolvekit;

namespace {

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInputError("cannot read '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

void WriteFile(const fs::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInputError("cannot write '" + path.string() + "'");
  out << contents;
}

bool IsPresetKey(const std::string& name) {
  for (const auto& preset : Presets()) {
    if (preset.key == name) return true;
  }
  return false;
}

// A params file, or the key of a bundled preset.
SbmParams LoadParams(const std::string& source, std::int64_t n) {
  SbmParams params = fs::is_regular_file(source) ? ParseParams(ReadFile(source))
                     : IsPresetKey(source)       ? FindPreset(source).params
                                                 : throw InvalidInputError(
                                                       "'" + source +
                                                       "' is neither a params file nor a preset");
  return n > 0 ? ScaleCommunities(params, n) : params;
}

void Emit(json body, const std::string& hash, std::uint64_t seed) {
  body["version"] = kVersion;
  body["config_hash"] = hash;
  body["seed"] = seed;
  std::cout << body.dump(2) << '\n';
}

std::string Hash(const json& inputs) { return HashText(inputs.dump()); }

// sample ---------------------------------------------------------------

struct SampleArgs {
  std::string params;
  std::int64_t n = 0;
  std::uint64_t seed = 0;
  std::string out;
  std::string labels;
};

int RunSample(const SampleArgs& args) {
  const SbmParams params = LoadParams(args.params, args.n);
  const Graph graph = SampleSbm(params, args.seed);
  const std::string labels_path = args.labels.empty() ? args.out + ".labels" : args.labels;
  std::ostringstream edges;
  WriteEdgeList(edges, graph);
  WriteFile(args.out, edges.str());
  std::ostringstream labels;
  WriteLabels(labels, params.labels());
  WriteFile(labels_path, labels.str());

  const auto estimate = EstimateParams(LabeledGraph{graph, params.labels()});
  const json inputs = {{"command", "sample"}, {"params", ParamsToJson(params)}};
  Emit({{"command", "sample"},
        {"vertices", graph.num_vertices()},
        {"edges", graph.num_edges()},
        {"block_densities", estimate.params.matrix()},
        {"edge_list", args.out},
        {"labels", labels_path}},
       Hash(inputs), args.seed);
  std::cerr << "sampled n=" << graph.num_vertices() << " |E|=" << graph.num_edges()
            << " densities=" << json(estimate.params.matrix()).dump() << '\n';
  return 0;
}

// mine -----------------------------------------------------------------

struct MineArgs {
  std::string params;
  double alpha = 0.01;
  std::int64_t n = 0;
  std::uint64_t seed = 0;
};

int RunMine(const MineArgs& args) {
  const SbmParams params = LoadParams(args.params, args.n);
  const MineSolution solution = Mine(params, args.alpha);
  const json inputs = {{"command", "mine"}, {"params", ParamsToJson(params)},
                       {"alpha", args.alpha}};
  json body = MineSolutionToJson(solution);
  body["command"] = "mine";
  Emit(body, Hash(inputs), args.seed);
  std::cerr << "MINE size " << solution.allocation.level() << " f=" << solution.f_value
            << " after " << solution.evaluations << " evaluations\n";
  return 0;
}

// resolve --------------------------------------------------------------

struct ResolveArgs {
  std::string edge_list;
  std::string method = "ich";
  std::string target = "astar";
  std::uint64_t seed = 0;
  std::string params;
  std::string labels;
  std::size_t cap = 16;
};

// Greedy and preorder need the block structure: bundled or explicit params,
// or labels from which it is estimated.
SbmParams BlockStructure(const ResolveArgs& args, const Graph& graph) {
  if (!args.params.empty()) {
    SbmParams params = LoadParams(args.params, 0);
    if (static_cast<std::size_t>(params.num_vertices()) != graph.num_vertices()) {
      throw InvalidInputError("params describe " + std::to_string(params.num_vertices()) +
                              " vertices but the graph has " +
                              std::to_string(graph.num_vertices()));
    }
    return params;
  }
  if (args.labels.empty()) {
    throw InvalidInputError("method '" + args.method + "' needs --params or --labels");
  }
  std::istringstream in(ReadFile(args.labels));
  LabeledGraph labeled{graph, ReadLabels(in)};
  labeled.Validate();
  for (std::size_t v = 1; v < labeled.labels.size(); ++v) {
    if (labeled.labels[v] < labeled.labels[v - 1]) {
      throw InvalidInputError("labels must be contiguous (non-decreasing by vertex id)");
    }
  }
  return EstimateParams(labeled).params;
}

int RunResolve(const ResolveArgs& args) {
  std::istringstream in(ReadFile(args.edge_list));
  const Graph graph = ReadEdgeList(in);

  std::optional<DistanceMatrix> distances;
  std::optional<ResolvingTarget> target;
  if (args.target == "astar") {
    target = ResolvingTarget::ModifiedAdjacency(graph);
  } else if (args.target == "adj") {
    target = ResolvingTarget::Adjacency(graph);
  } else {
    distances = AllPairsDistances(graph);
    target = ResolvingTarget::Distances(*distances);
  }

  ResolvingSetRecord record;
  record.method = args.method;
  record.verified_against = TargetName(target->kind());
  if (args.method == "brute") {
    record.set = BruteForceMetricDimension(*target, args.cap).set;
  } else if (args.method == "ich") {
    IchOptions options;
    options.distance_cap = args.cap;
    record.set = InformationContentHeuristic(*target, options);
  } else if (args.method == "greedy") {
    record.seed = args.seed;
    record.set = GreedyBaseline(graph, BlockStructure(args, graph), args.seed);
  } else if (args.method == "preorder") {
    record.set = PreorderBaseline(graph, BlockStructure(args, graph));
  } else {
    record.seed = args.seed;
    record.set = RandomBaseline(graph, args.seed);
  }
  record.verified = IsResolving(*target, record.set);

  const json inputs = {{"command", "resolve"},
                       {"graph", HashText(ReadFile(args.edge_list))},
                       {"method", args.method},
                       {"target", args.target}};
  json body = ResolvingSetToJson(record);
  body["command"] = "resolve";
  Emit(body, Hash(inputs), args.seed);
  std::cerr << args.method << " found " << record.set.size() << " landmarks; "
            << (record.verified ? "resolves " : "does NOT resolve ") << record.verified_against
            << '\n';
  return 0;
}

// bench ----------------------------------------------------------------

struct BenchArgs {
  std::string config;
  std::int64_t n = 0;
  std::string out_dir = "results";
  std::string format = "csv";
  std::optional<std::size_t> graphs;
  std::optional<std::size_t> replicates;
  std::optional<std::uint64_t> seed;
  std::size_t long_path_cap = 5000;
};

// Config file, preset key, or "all" for the whole preset suite. A file may
// hold one config object or {"networks": [...]} whose entries inherit the
// remaining top-level keys.
std::vector<json> LoadConfigs(const BenchArgs& args) {
  std::vector<json> configs;
  if (args.config == "all") {
    for (const auto& preset : Presets()) {
      configs.push_back({{"preset", preset.key}});
    }
  } else if (IsPresetKey(args.config) && !fs::is_regular_file(args.config)) {
    configs.push_back({{"preset", args.config}});
  } else {
    json root;
    try {
      root = json::parse(ReadFile(args.config));
    } catch (const json::parse_error& e) {
      throw InvalidInputError(std::string("malformed config JSON: ") + e.what());
    }
    if (!root.is_object()) throw InvalidInputError("config must be a JSON object");
    if (root.contains("networks")) {
      json defaults = root;
      defaults.erase("networks");
      for (const auto& entry : root.at("networks")) {
        json merged = defaults;
        merged.update(entry);
        configs.push_back(merged);
      }
    } else {
      configs.push_back(root);
    }
  }
  for (auto& config : configs) {
    if (args.n > 0) config["n"] = args.n;
    if (args.graphs) config["n_graphs"] = *args.graphs;
    if (args.replicates) config["replicates"] = *args.replicates;
    if (args.seed) config["base_seed"] = *args.seed;
  }
  return configs;
}

TableFormat ParseFormat(const std::string& name) {
  if (name == "csv") return TableFormat::kCsv;
  if (name == "json") return TableFormat::kJson;
  return TableFormat::kMarkdown;
}

std::string Extension(TableFormat format) {
  switch (format) {
    case TableFormat::kCsv:
      return ".csv";
    case TableFormat::kJson:
      return ".json";
    case TableFormat::kMarkdown:
      return ".md";
  }
  return "";
}

int RunBench(const BenchArgs& args) {
  std::vector<ExperimentConfig> configs;
  for (const auto& raw : LoadConfigs(args)) {
    ExperimentConfig config = ConfigFromJson(raw);
    if (config.network == "custom" && raw.contains("preset")) {
      config.network = FindPreset(raw.at("preset").get<std::string>()).display_name;
    }
    configs.push_back(std::move(config));
  }
  std::string joined;
  for (const auto& config : configs) joined += ConfigToJson(config).dump();
  const std::string hash = HashText(joined);

  std::vector<ExperimentReport> reports;
  std::vector<NamedLongPath> long_paths;
  for (const auto& config : configs) {
    std::cerr << "running " << config.network << " (n=" << config.params.num_vertices()
              << ")\n";
    reports.push_back(RunExperiment(config));
    long_paths.push_back({config.network, LongPathFraction(config, args.long_path_cap)});
  }

  const TableFormat format = ParseFormat(args.format);
  const fs::path dir(args.out_dir);
  fs::create_directories(dir);
  const std::vector<std::pair<std::string, Table>> tables = {
      {"mine_sizes", MineSizeTable(reports)},
      {"baseline_sizes", BaselineSizeTable(reports)},
      {"mine_times", MineTimeTable(reports)},
      {"baseline_times", BaselineTimeTable(reports)},
      {"long_paths", LongPathTable(long_paths)},
  };
  json files = json::array();
  for (const auto& [name, table] : tables) {
    const fs::path path = dir / (name + "_" + hash + Extension(format));
    WriteFile(path, EmitTable(table, format));
    files.push_back(path.string());
  }
  json report_docs = json::array();
  for (const auto& report : reports) report_docs.push_back(ReportToJson(report));
  const fs::path report_path = dir / ("report_" + hash + ".json");
  WriteFile(report_path, report_docs.dump(2) + "\n");
  files.push_back(report_path.string());

  std::size_t failures = 0;
  for (const auto& report : reports) {
    for (const auto& cell : report.cells) failures += cell.failures;
  }
  Emit({{"command", "bench"}, {"files", files}, {"failures", failures}}, hash,
       configs.front().base_seed);
  std::cerr << EmitTable(MineSizeTable(reports), TableFormat::kMarkdown)
            << EmitTable(BaselineSizeTable(reports), TableFormat::kMarkdown);
  if (failures > 0) std::cerr << failures << " method runs failed (see report)\n";
  return 0;
}

// bounds ---------------------------------------------------------------

struct BoundsArgs {
  std::string params;
  std::int64_t n = 0;
  std::optional<double> p;
  std::optional<double> constant;
  std::uint64_t seed = 0;
};

json ConditionJson(const BlockCondition& pair) {
  return {{"i", pair.i}, {"j", pair.j}, {"lhs", pair.lhs}, {"rhs", pair.rhs},
          {"holds", pair.holds}};
}

int RunBounds(const BoundsArgs& args) {
  if (args.p) {
    if (args.n < 1) throw InvalidInputError("--p needs --n >= 1");
    const json inputs = {{"command", "bounds"}, {"n", args.n}, {"p", *args.p}};
    const auto beta = ErdosRenyiBetaUpper(args.n, *args.p);
    const auto any = ErdosRenyiAnySetSize(args.n, *args.p);
    Emit({{"command", "bounds"}, {"beta_upper", beta}, {"any_set", any}}, Hash(inputs),
         args.seed);
    std::cerr << "G(" << args.n << ", " << *args.p << "): beta <= " << beta
              << ", any " << any << " nodes resolve w.h.p.\n";
    return 0;
  }
  if (args.params.empty() || !args.constant) {
    throw InvalidInputError("bounds needs --n with --p, or a params source with --C");
  }
  const SbmParams params = LoadParams(args.params, args.n);
  const double c = *args.constant;
  const json inputs = {{"command", "bounds"}, {"params", ParamsToJson(params)}, {"C", c}};
  json body = {{"command", "bounds"}, {"C", c}};
  if (c > 1.0) {
    const auto report = DiameterTwoCondition(params, c);
    json pairs = json::array();
    for (const auto& pair : report.pairs) pairs.push_back(ConditionJson(pair));
    body["condition"] = "diameter_at_most_2";
    body["holds"] = report.holds;
    body["pairs"] = pairs;
  } else {
    const auto report = DiameterAboveTwoCondition(params, c);
    body["condition"] = "diameter_above_2";
    body["holds"] = report.holds;
    if (report.witness) {
      const auto& w = *report.witness;
      body["witness"] = {{"i", w.i},   {"j", w.j},     {"clause", std::string(1, w.clause)},
                         {"lhs", w.lhs}, {"rhs", w.rhs}};
    } else {
      body["witness"] = nullptr;
    }
  }
  const auto expected = ExpectedLongPairs(params);
  body["expected_long_pairs"] = expected.total;
  body["expected_long_fraction"] = expected.fraction;
  Emit(body, Hash(inputs), args.seed);
  std::cerr << body.at("condition").get<std::string>() << " condition "
            << (body.at("holds").get<bool>() ? "holds" : "does not hold") << " at C=" << c
            << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Resolving sets for stochastic block models", "resolvekit"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  SampleArgs sample;
  auto* sample_cmd = app.add_subcommand("sample", "Draw a graph from a block model");
  sample_cmd->add_option("params", sample.params, "Params JSON file or preset name")->required();
  sample_cmd->add_option("--n", sample.n, "Rescale communities to this many vertices");
  sample_cmd->add_option("--seed", sample.seed, "Sampling seed")->capture_default_str();
  sample_cmd->add_option("--out", sample.out, "Edge-list output path")->required();
  sample_cmd->add_option("--labels", sample.labels, "Labels output path (default <out>.labels)");

  MineArgs mine;
  auto* mine_cmd = app.add_subcommand("mine", "Minimum allocation with f(k) <= alpha");
  mine_cmd->add_option("params", mine.params, "Params JSON file or preset name")->required();
  mine_cmd->add_option("--alpha", mine.alpha, "Bound on expected collisions")->required();
  mine_cmd->add_option("--n", mine.n, "Rescale communities to this many vertices");
  mine_cmd->add_option("--seed", mine.seed, "Echoed seed")->capture_default_str();

  ResolveArgs resolve;
  auto* resolve_cmd = app.add_subcommand("resolve", "Find a resolving set of a graph");
  resolve_cmd->add_option("edge_list", resolve.edge_list, "Edge-list file")->required();
  resolve_cmd->add_option("--method", resolve.method)
      ->check(CLI::IsMember({"ich", "greedy", "preorder", "random", "brute"}))
      ->capture_default_str();
  resolve_cmd->add_option("--target", resolve.target, "astar, dist or adj")
      ->check(CLI::IsMember({"astar", "dist", "adj"}))
      ->capture_default_str();
  resolve_cmd->add_option("--seed", resolve.seed)->capture_default_str();
  resolve_cmd->add_option("--params", resolve.params, "Block model for greedy/preorder");
  resolve_cmd->add_option("--labels", resolve.labels, "Community labels for greedy/preorder");
  resolve_cmd->add_option("--cap", resolve.cap, "Vertex cap for brute force and ICH on D")
      ->capture_default_str();

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Run the experiment protocol");
  bench_cmd->add_option("config", bench.config, "Config JSON, preset name, or 'all'")
      ->required();
  bench_cmd->add_option("--n", bench.n, "Rescale every network to this many vertices");
  bench_cmd->add_option("--out", bench.out_dir, "Results directory")->capture_default_str();
  bench_cmd->add_option("--format", bench.format)
      ->check(CLI::IsMember({"csv", "json", "markdown"}))
      ->capture_default_str();
  bench_cmd->add_option("--graphs", bench.graphs, "Override n_graphs");
  bench_cmd->add_option("--replicates", bench.replicates, "Override replicates");
  bench_cmd->add_option("--seed", bench.seed, "Override base_seed");
  bench_cmd->add_option("--long-path-cap", bench.long_path_cap)->capture_default_str();

  BoundsArgs bounds;
  auto* bounds_cmd = app.add_subcommand("bounds", "Erdos-Renyi bounds and diameter conditions");
  bounds_cmd->add_option("params", bounds.params, "Params JSON file or preset name");
  bounds_cmd->add_option("--n", bounds.n);
  bounds_cmd->add_option("--p", bounds.p);
  bounds_cmd->add_option("--C", bounds.constant);
  bounds_cmd->add_option("--seed", bounds.seed, "Echoed seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(ErrorCode::kInvalidInput);
  }

  try {
    if (*sample_cmd) return RunSample(sample);
    if (*mine_cmd) return RunMine(mine);
    if (*resolve_cmd) return RunResolve(resolve);
    if (*bench_cmd) return RunBench(bench);
    if (*bounds_cmd) return RunBounds(bounds);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return static_cast<int>(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return static_cast<int>(ErrorCode::kInvalidInput);
  }
  return 0;
}
