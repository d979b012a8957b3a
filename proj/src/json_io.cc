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

#include "resolvekit/json_io.h"

#include <cstdio>
#include <istream>
#include <ostream>
#include <string>

#include "resolvekit/error.h"

namespace resolvekit {

using nlohmann::json;

namespace {

const json& Require(const json& object, const char* key) {
  if (!object.is_object() || !object.contains(key)) {
    throw InvalidInputError(std::string("missing key \"") + key + "\"");
  }
  return object.at(key);
}

template <typename T>
T As(const json& value, const char* what) {
  try {
    return value.get<T>();
  } catch (const json::exception&) {
    throw InvalidInputError(std::string("\"") + what + "\" has the wrong type");
  }
}

json OptionalNumber(const std::optional<double>& value) {
  return value ? json(*value) : json(nullptr);
}

json CellToJson(const ReportCell& cell) {
  return {{"method", MethodName(cell.method)},
          {"alpha", OptionalNumber(cell.alpha)},
          {"size_mean", cell.size.mean},
          {"size_std", cell.size.std},
          {"seconds_mean", cell.seconds.mean},
          {"seconds_std", cell.seconds.std},
          {"runs", cell.runs},
          {"valid_runs", cell.valid_runs},
          {"failures", cell.failures},
          {"validity_rate", cell.validity_rate()},
          {"allocation", cell.allocation}};
}

json RunToJson(const RunRecord& run) {
  json out = {{"method", MethodName(run.method)}, {"alpha", OptionalNumber(run.alpha)},
              {"graph", run.graph},               {"replicate", run.replicate},
              {"seed", run.seed},                 {"size", run.size},
              {"valid", run.valid},               {"seconds", run.seconds}};
  if (!run.error.empty()) out["error"] = run.error;
  return out;
}

}  // namespace

json ParamsToJson(const SbmParams& params) {
  return {{"community_sizes", std::vector<std::int64_t>(params.sizes().begin(),
                                                        params.sizes().end())},
          {"P", params.matrix()}};
}

SbmParams ParamsFromJson(const json& json_value) {
  auto sizes = As<std::vector<std::int64_t>>(Require(json_value, "community_sizes"),
                                             "community_sizes");
  auto matrix = As<std::vector<std::vector<double>>>(Require(json_value, "P"), "P");
  return SbmParams(std::move(sizes), std::move(matrix));
}

SbmParams ParseParams(const std::string& text) {
  json parsed;
  try {
    parsed = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInputError(std::string("malformed params JSON: ") + e.what());
  }
  return ParamsFromJson(parsed);
}

void WriteLabels(std::ostream& out, const std::vector<std::uint32_t>& labels) {
  for (auto label : labels) out << label << '\n';
}

std::vector<std::uint32_t> ReadLabels(std::istream& in) {
  std::vector<std::uint32_t> labels;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty() || line[0] == '#') continue;
    std::size_t used = 0;
    unsigned long value = 0;
    try {
      value = std::stoul(line, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || line.find_first_not_of(" \t\r", used) != std::string::npos ||
        value > UINT32_MAX || line[0] == '-') {
      throw InvalidInputError("labels line " + std::to_string(line_number) +
                              ": expected a community id");
    }
    labels.push_back(static_cast<std::uint32_t>(value));
  }
  return labels;
}

json MineSolutionToJson(const MineSolution& solution) {
  const auto counts = solution.allocation.counts();
  return {{"allocation", std::vector<std::int64_t>(counts.begin(), counts.end())},
          {"size", solution.allocation.level()},
          {"f_value", solution.f_value},
          {"alpha", solution.alpha},
          {"evaluations", solution.evaluations}};
}

json ResolvingSetToJson(const ResolvingSetRecord& record) {
  return {{"method", record.method},
          {"seed", record.seed ? json(*record.seed) : json(nullptr)},
          {"set", record.set},
          {"size", record.set.size()},
          {"verified_against", record.verified_against},
          {"verified", record.verified}};
}

json ConfigToJson(const ExperimentConfig& config) {
  std::vector<std::string> methods;
  for (Method m : config.methods) methods.push_back(MethodName(m));
  return {{"network", config.network},
          {"params", ParamsToJson(config.params)},
          {"methods", methods},
          {"alphas", config.alphas},
          {"n_graphs", config.n_graphs},
          {"replicates", config.replicates},
          {"ich_replicates", config.ich_replicates},
          {"base_seed", config.base_seed}};
}

ExperimentConfig ConfigFromJson(const json& value) {
  if (!value.is_object()) throw InvalidInputError("config must be a JSON object");
  std::optional<SbmParams> params;
  std::string network;
  if (value.contains("preset")) {
    const auto& preset = FindPreset(As<std::string>(value.at("preset"), "preset"));
    params = preset.params;
    network = preset.display_name;
  } else {
    params = ParamsFromJson(Require(value, "params"));
    network = "custom";
  }
  if (value.contains("network")) network = As<std::string>(value.at("network"), "network");
  if (value.contains("n")) {
    const auto n = As<std::int64_t>(value.at("n"), "n");
    if (n < 1) throw InvalidInputError("\"n\" must be >= 1");
    params = ScaleCommunities(*params, n);
  }
  ExperimentConfig config(network, *params);
  if (value.contains("methods")) {
    config.methods.clear();
    for (const auto& name : As<std::vector<std::string>>(value.at("methods"), "methods")) {
      const auto method = ParseMethod(name);
      if (!method) throw InvalidInputError("unknown method '" + name + "'");
      config.methods.push_back(*method);
    }
  }
  if (value.contains("alphas")) {
    config.alphas = As<std::vector<double>>(value.at("alphas"), "alphas");
  }
  if (value.contains("n_graphs")) {
    config.n_graphs = As<std::size_t>(value.at("n_graphs"), "n_graphs");
  }
  if (value.contains("replicates")) {
    config.replicates = As<std::size_t>(value.at("replicates"), "replicates");
  }
  if (value.contains("ich_replicates")) {
    config.ich_replicates = As<std::size_t>(value.at("ich_replicates"), "ich_replicates");
  }
  if (value.contains("base_seed")) {
    config.base_seed = As<std::uint64_t>(value.at("base_seed"), "base_seed");
  }
  config.Validate();
  return config;
}

std::string HashText(const std::string& text) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char ch : text) {
    hash ^= ch;
    hash *= 0x100000001b3ULL;
  }
  char buffer[17];
  std::snprintf(buffer, sizeof(buffer), "%016llx", static_cast<unsigned long long>(hash));
  return buffer;
}

std::string ConfigHash(const ExperimentConfig& config) {
  return HashText(ConfigToJson(config).dump());
}

json TableToJson(const Table& table) {
  return {{"columns", table.header}, {"rows", table.rows}};
}

json ReportToJson(const ExperimentReport& report, bool include_runs) {
  json cells = json::array();
  for (const auto& cell : report.cells) cells.push_back(CellToJson(cell));
  json out = {{"network", report.network},
              {"config_hash", report.config_hash},
              {"base_seed", report.base_seed},
              {"graph_seeds", report.graph_seeds},
              {"std_divisor", "N"},
              {"cells", cells}};
  if (include_runs) {
    json runs = json::array();
    for (const auto& run : report.runs) runs.push_back(RunToJson(run));
    out["runs"] = runs;
  }
  return out;
}

}  // namespace resolvekit
