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

// Python bindings. Graphs cross the boundary as (n, edge list); parameters
// as (community sizes, P). Library errors map to resolvekit.Error subclasses
// carrying the CLI exit code.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "json.hpp"
#include "resolvekit/error.h"
#include "resolvekit/graph.h"
#include "resolvekit/harness.h"
#include "resolvekit/json_io.h"
#include "resolvekit/mine.h"
#include "resolvekit/resolvers.h"
#include "resolvekit/sbm.h"
#include "resolvekit/version.h"

namespace py = pybind11;
using namespace resolvekit;

namespace {

using Sizes = std::vector<std::int64_t>;
using Matrix = std::vector<std::vector<double>>;
using Edges = std::vector<std::pair<Vertex, Vertex>>;

Graph ToGraph(std::size_t n, const Edges& edges) {
  std::vector<Edge> converted(edges.begin(), edges.end());
  return BuildGraph(n, converted, nullptr);
}

Edges FromGraph(const Graph& graph) {
  const auto edges = graph.edges();
  return Edges(edges.begin(), edges.end());
}

py::dict ParamsDict(const SbmParams& params) {
  py::dict out;
  out["community_sizes"] = Sizes(params.sizes().begin(), params.sizes().end());
  out["P"] = params.matrix();
  return out;
}

template <typename Fn>
auto WithTarget(std::size_t n, const Edges& edges, const std::string& target, Fn fn) {
  const Graph graph = ToGraph(n, edges);
  if (target == "astar") return fn(ResolvingTarget::ModifiedAdjacency(graph));
  if (target == "adj") return fn(ResolvingTarget::Adjacency(graph));
  if (target == "dist") {
    const DistanceMatrix distances = AllPairsDistances(graph);
    return fn(ResolvingTarget::Distances(distances));
  }
  throw InvalidInputError("unknown target '" + target + "' (astar, adj, dist)");
}

py::object JsonToPython(const nlohmann::json& value) {
  return py::module_::import("json").attr("loads")(value.dump());
}

}  // namespace

PYBIND11_MODULE(_resolvekit, m) {
  m.doc() = "Resolving sets for stochastic block models";
  m.attr("__version__") = kVersion;

  static py::exception<Error> error(m, "Error");
  static py::exception<InvalidInputError> invalid(m, "InvalidInputError", error.ptr());
  static py::exception<InfeasibleError> infeasible(m, "InfeasibleError", error.ptr());
  static py::exception<NoResolvingSetError> no_set(m, "NoResolvingSetError", error.ptr());
  static py::exception<SizeCapError> size_cap(m, "SizeCapError", error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const InvalidInputError& e) {
      py::set_error(invalid, e.what());
    } catch (const InfeasibleError& e) {
      py::set_error(infeasible, e.what());
    } catch (const NoResolvingSetError& e) {
      py::set_error(no_set, e.what());
    } catch (const SizeCapError& e) {
      py::set_error(size_cap, e.what());
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  m.def("presets", [] {
    py::dict out;
    for (const auto& preset : Presets()) out[py::str(preset.key)] = ParamsDict(preset.params);
    return out;
  });
  m.def(
      "scale_communities",
      [](const Sizes& sizes, const Matrix& p, std::int64_t n) {
        return ParamsDict(ScaleCommunities(SbmParams(sizes, p), n));
      },
      py::arg("sizes"), py::arg("P"), py::arg("n"));
  m.def(
      "sample_sbm",
      [](const Sizes& sizes, const Matrix& p, std::uint64_t seed) {
        py::gil_scoped_release release;
        return FromGraph(SampleSbm(SbmParams(sizes, p), seed));
      },
      py::arg("sizes"), py::arg("P"), py::arg("seed") = 0);
  m.def(
      "expected_collisions",
      [](const Sizes& sizes, const Matrix& p, const std::vector<std::int64_t>& k) {
        return ExpectedCollisions(SbmParams(sizes, p), k);
      },
      py::arg("sizes"), py::arg("P"), py::arg("k"));
  m.def(
      "expected_long_pairs",
      [](const Sizes& sizes, const Matrix& p) {
        return ExpectedLongPairs(SbmParams(sizes, p)).total;
      },
      py::arg("sizes"), py::arg("P"));
  m.def(
      "mine",
      [](const Sizes& sizes, const Matrix& p, double alpha) {
        return JsonToPython(MineSolutionToJson(Mine(SbmParams(sizes, p), alpha)));
      },
      py::arg("sizes"), py::arg("P"), py::arg("alpha"));
  m.def("er_beta_upper", &ErdosRenyiBetaUpper, py::arg("n"), py::arg("p"));
  m.def("er_any_set_size", &ErdosRenyiAnySetSize, py::arg("n"), py::arg("p"));
  m.def(
      "diameter",
      [](std::size_t n, const Edges& edges) -> py::object {
        const Distance d = Diameter(AllPairsDistances(ToGraph(n, edges)));
        return d.reachable() ? py::object(py::int_(d.hops())) : py::object(py::none());
      },
      py::arg("n"), py::arg("edges"), "Diameter, or None when disconnected.");
  m.def(
      "is_resolving",
      [](std::size_t n, const Edges& edges, const NodeSet& set, const std::string& target) {
        return WithTarget(n, edges, target,
                          [&](const ResolvingTarget& t) { return IsResolving(t, set); });
      },
      py::arg("n"), py::arg("edges"), py::arg("set"), py::arg("target") = "astar");
  m.def(
      "ich",
      [](std::size_t n, const Edges& edges, const std::string& target) {
        return WithTarget(n, edges, target, [](const ResolvingTarget& t) {
          return InformationContentHeuristic(t);
        });
      },
      py::arg("n"), py::arg("edges"), py::arg("target") = "astar");
  m.def(
      "metric_dimension",
      [](std::size_t n, const Edges& edges, const std::string& target, std::size_t cap) {
        return WithTarget(n, edges, target, [&](const ResolvingTarget& t) {
          return BruteForceMetricDimension(t, cap).set;
        });
      },
      py::arg("n"), py::arg("edges"), py::arg("target") = "dist", py::arg("cap") = 16);
  m.def(
      "run_experiment",
      [](const std::string& config_json) {
        nlohmann::json parsed;
        try {
          parsed = nlohmann::json::parse(config_json);
        } catch (const nlohmann::json::parse_error& e) {
          throw InvalidInputError(std::string("malformed config JSON: ") + e.what());
        }
        const ExperimentConfig config = ConfigFromJson(parsed);
        ExperimentReport report;
        {
          py::gil_scoped_release release;
          report = RunExperiment(config);
        }
        return JsonToPython(ReportToJson(report));
      },
      py::arg("config_json"), "Runs the protocol; config as a JSON string.");
}
