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

// Runs the resolvekit binary end to end.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

namespace fs = std::filesystem;

struct Result {
  int exit_code = -1;
  std::string out;
};

Result RunCli(const std::string& args) {
  const std::string command = std::string(RESOLVEKIT_CLI) + " " + args + " 2>/dev/null";
  Result result;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return result;
  std::array<char, 4096> buffer{};
  std::size_t n;
  while ((n = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0) result.out.append(buffer.data(), n);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

nlohmann::json Json(const Result& result) { return nlohmann::json::parse(result.out); }

std::string Slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("resolvekit_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Write(const std::string& name, const std::string& contents) {
    const fs::path path = dir_ / name;
    std::ofstream(path) << contents;
    return path.string();
  }

  fs::path dir_;
};

TEST_F(Cli, SampleWritesGraphAndLabels) {
  const auto out = (dir_ / "k.txt").string();
  const Result r = RunCli("sample karate --n 100 --seed 7 --out " + out);
  ASSERT_EQ(r.exit_code, 0);
  const auto json = Json(r);
  EXPECT_EQ(json["vertices"], 100);
  EXPECT_EQ(json["seed"], 7);
  EXPECT_TRUE(json.contains("version"));
  EXPECT_TRUE(json.contains("config_hash"));
  EXPECT_EQ(Slurp(out).rfind("# vertices 100\n", 0), 0u);
  EXPECT_TRUE(fs::exists(out + ".labels"));
  const auto again = (dir_ / "k2.txt").string();
  ASSERT_EQ(RunCli("sample karate --n 100 --seed 7 --out " + again).exit_code, 0);
  EXPECT_EQ(Slurp(out), Slurp(again));
}

TEST_F(Cli, SampleRejectsBadProbability) {
  const auto params = Write("bad.json", R"({"community_sizes": [3, 3], "P": [[0.5, 1.2], [1.2, 0.5]]})");
  EXPECT_EQ(RunCli("sample " + params + " --out " + (dir_ / "x").string()).exit_code, 2);
  const std::string command = std::string(RESOLVEKIT_CLI) + " sample " + params + " --out " +
                              (dir_ / "x").string() + " 2>&1 >/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  std::array<char, 512> buffer{};
  const std::size_t n = std::fread(buffer.data(), 1, buffer.size(), pipe);
  pclose(pipe);
  EXPECT_NE(std::string(buffer.data(), n).find("P[0][1]"), std::string::npos);
}

TEST_F(Cli, MineExamples) {
  const Result karate = RunCli("mine karate --n 10000 --alpha 0.01");
  ASSERT_EQ(karate.exit_code, 0);
  const auto json = Json(karate);
  EXPECT_EQ(json["allocation"][0].get<int>() + json["allocation"][1].get<int>(), 82);
  EXPECT_TRUE(json.contains("f_value"));
  EXPECT_TRUE(json.contains("evaluations"));
  const Result loose = RunCli("mine karate --alpha 1e9");
  ASSERT_EQ(loose.exit_code, 0);
  EXPECT_EQ(Json(loose)["allocation"], nlohmann::json::array({0, 0}));
  EXPECT_EQ(RunCli("mine karate --alpha 0").exit_code, 3);
  EXPECT_EQ(RunCli("mine no-such-network --alpha 0.1").exit_code, 2);
}

TEST_F(Cli, ResolveExamples) {
  const auto p3 = Write("p3.txt", "0 1\n1 2\n");
  const Result brute = RunCli("resolve " + p3 + " --method brute --target dist");
  ASSERT_EQ(brute.exit_code, 0);
  EXPECT_EQ(Json(brute)["size"], 1);
  EXPECT_EQ(Json(brute)["verified_against"], "D");
  const auto k3 = Write("k3.txt", "0 1\n1 2\n0 2\n");
  const Result ich = RunCli("resolve " + k3 + " --method ich");
  ASSERT_EQ(ich.exit_code, 0);
  EXPECT_EQ(Json(ich)["size"], 2);
  EXPECT_EQ(Json(ich)["verified"], true);
  const auto twins = Write("twins.txt", "# vertices 4\n0 1\n");
  EXPECT_EQ(RunCli("resolve " + twins + " --method ich --target adj").exit_code, 4);
  const auto big = Write("big.txt", "# vertices 40\n0 1\n");
  EXPECT_EQ(RunCli("resolve " + big + " --method brute").exit_code, 5);
  EXPECT_EQ(RunCli("resolve " + p3 + " --method greedy").exit_code, 2);
  EXPECT_EQ(RunCli("resolve " + p3 + " --method nonsense").exit_code, 2);
}

TEST_F(Cli, ResolveBaselinesWithLabels) {
  const auto graph = (dir_ / "g.txt").string();
  ASSERT_EQ(RunCli("sample political-books --n 200 --out " + graph).exit_code, 0);
  for (const char* method : {"greedy", "preorder", "random", "ich"}) {
    const Result r = RunCli("resolve " + graph + " --method " + method + " --labels " + graph +
                         ".labels --seed 3");
    ASSERT_EQ(r.exit_code, 0) << method;
    EXPECT_EQ(Json(r)["verified"], true) << method;
    EXPECT_EQ(Json(r)["seed"], 3);
  }
}

TEST_F(Cli, BoundsExamples) {
  const Result er = RunCli("bounds --n 500 --p 0.5");
  ASSERT_EQ(er.exit_code, 0);
  EXPECT_EQ(Json(er)["beta_upper"], 18);
  EXPECT_EQ(Json(er)["any_set"], 27);
  EXPECT_EQ(Json(RunCli("bounds --n 500 --p 0.3"))["beta_upper"],
            Json(RunCli("bounds --n 500 --p 0.7"))["beta_upper"]);
  EXPECT_EQ(RunCli("bounds --n 500 --p 1").exit_code, 2);
  const Result two = RunCli("bounds karate --n 1000 --C 1.5");
  ASSERT_EQ(two.exit_code, 0);
  EXPECT_EQ(Json(two)["condition"], "diameter_at_most_2");
  const Result above = RunCli("bounds karate --C 0.5");
  ASSERT_EQ(above.exit_code, 0);
  EXPECT_EQ(Json(above)["condition"], "diameter_above_2");
}

TEST_F(Cli, BenchEmitsFiveDeterministicTables) {
  const auto out = (dir_ / "results").string();
  const std::string args = "bench all --n 1000 --graphs 2 --replicates 2 --out " + out;
  const Result first = RunCli(args);
  ASSERT_EQ(first.exit_code, 0);
  const auto files = Json(first)["files"];
  std::size_t tables = 0;
  for (const auto& file : files) tables += file.get<std::string>().find("report_") == std::string::npos;
  EXPECT_EQ(tables, 5u);
  const std::string hash = Json(first)["config_hash"];
  const fs::path sizes = fs::path(out) / ("mine_sizes_" + hash + ".csv");
  const fs::path baselines = fs::path(out) / ("baseline_sizes_" + hash + ".csv");
  const std::string mine_csv = Slurp(sizes), baseline_csv = Slurp(baselines);
  EXPECT_NE(mine_csv.find("Karate Club"), std::string::npos);
  ASSERT_EQ(RunCli(args).exit_code, 0);
  EXPECT_EQ(Slurp(sizes), mine_csv);
  EXPECT_EQ(Slurp(baselines), baseline_csv);
}

TEST_F(Cli, BenchConfigFileAndErrors) {
  const auto config = Write("config.json", R"({"networks": [{"preset": "karate"},
      {"params": {"community_sizes": [40, 40], "P": [[0.3, 0.1], [0.1, 0.3]]}, "network": "toy"}],
      "n_graphs": 1, "replicates": 1, "methods": ["Random", "MINE"], "alphas": [0.1]})");
  const Result ok = RunCli("bench " + config + " --out " + (dir_ / "r").string());
  ASSERT_EQ(ok.exit_code, 0);
  EXPECT_EQ(Json(ok)["failures"], 0);
  EXPECT_EQ(RunCli("bench unknown-preset").exit_code, 2);
  const auto bad = Write("bad.json", R"({"preset": "no-such-network"})");
  EXPECT_EQ(RunCli("bench " + bad).exit_code, 2);
  EXPECT_EQ(RunCli("").exit_code, 2);
}

}  // namespace
