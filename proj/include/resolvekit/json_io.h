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

// JSON and plain-text file formats shared by the CLI and the bindings.

#ifndef RESOLVEKIT_JSON_IO_H_
#define RESOLVEKIT_JSON_IO_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "resolvekit/harness.h"
#include "resolvekit/mine.h"
#include "resolvekit/resolvers.h"
#include "resolvekit/sbm.h"

namespace resolvekit {

// {"community_sizes": [...], "P": [[...], ...]}
nlohmann::json ParamsToJson(const SbmParams& params);
// Throws InvalidInputError on missing keys or wrong types; SbmParams
// validation errors pass through.
SbmParams ParamsFromJson(const nlohmann::json& json);
// Parses a file's text; InvalidInputError on malformed JSON.
SbmParams ParseParams(const std::string& text);

// One community id per line, vertex order.
void WriteLabels(std::ostream& out, const std::vector<std::uint32_t>& labels);
std::vector<std::uint32_t> ReadLabels(std::istream& in);

nlohmann::json MineSolutionToJson(const MineSolution& solution);

struct ResolvingSetRecord {
  std::string method;
  std::optional<std::uint64_t> seed;
  NodeSet set;
  // Target name ("A", "A*", "D") the set was checked against.
  std::string verified_against;
  bool verified = false;
};
nlohmann::json ResolvingSetToJson(const ResolvingSetRecord& record);

// {"network", "params", "methods", "alphas", "n_graphs", "replicates",
//  "ich_replicates", "base_seed"}.
nlohmann::json ConfigToJson(const ExperimentConfig& config);
// Accepts the above, or "preset" (a preset key) in place of "params", plus
// an optional "n" that rescales the communities.
ExperimentConfig ConfigFromJson(const nlohmann::json& json);

// 16 hex digits of FNV-1a over the canonical config dump.
std::string ConfigHash(const ExperimentConfig& config);
std::string HashText(const std::string& text);

nlohmann::json TableToJson(const Table& table);
nlohmann::json ReportToJson(const ExperimentReport& report, bool include_runs = false);

}  // namespace resolvekit

#endif  // RESOLVEKIT_JSON_IO_H_
