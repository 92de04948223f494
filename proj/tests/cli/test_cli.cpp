// Copyright 2026 The CPQC Authors
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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "app.hpp"
#include "cpqc/ir/text_format.hpp"
#include "cpqc/transpile/report.hpp"

namespace cpqc {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("cpqc_cli_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

fs::path write(const fs::path& dir, const std::string& name, const std::string& text) {
  const fs::path p = dir / name;
  std::ofstream(p) << text;
  return p;
}

std::vector<std::string> lines(const fs::path& p) {
  std::ifstream in(p);
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

const char* kTinySearch =
    "[search]\ngenerations = 1\npopulation = 2\niterations = 2\n"
    "[optimizer]\nmax_steps = 15\n";

TEST(Cli, UnknownFlagIsUsageError) {
  EXPECT_EQ(run({"verify", "--no-such-flag"}).code, cli::kConfigError);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kConfigError);
}

TEST(Cli, BadConfigValueNamesField) {
  const auto dir = scratch("badcfg");
  const auto cfg = write(dir, "run.ini", "[search]\nbeta = -1\n");
  const auto r = run({"train", "--config", cfg.string(), "--out", dir.string()});
  EXPECT_EQ(r.code, cli::kConfigError);
  EXPECT_NE(r.err.find("search.beta"), std::string::npos) << r.err;
  const auto unknown = write(dir, "unknown.ini", "[search]\nbogus = 1\n");
  EXPECT_EQ(run({"train", "--config", unknown.string()}).code, cli::kConfigError);
}

TEST(Cli, ConfigAcceptsTrailingComments) {
  const auto dir = scratch("comments");
  const auto cfg = write(dir, "run.ini",
                         "; header\n[payoff]\nkind = put ; a put\nstrike = 95\n");
  const auto r = run({"price", "--config", cfg.string(), "--backend", "exact", "--out", dir.string()});
  EXPECT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_NE(r.out.find("\"spec\":\"put\""), std::string::npos);
}

TEST(Cli, VerifyFixturesAndFiles) {
  const auto dir = scratch("verify");
  auto r = run({"verify", "--fixture", "call_fig3", "--trials", "5", "--out", dir.string()});
  EXPECT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
  r = run({"verify", "--fixture", "basket_figA2", "--sizes", "3,2", "--trials", "5"});
  EXPECT_EQ(r.code, cli::kOk) << r.err;

  const auto corrupt = write(dir, "broken.cpqc", "this is not a circuit\n");
  r = run({"verify", "--circuit", corrupt.string(), "--trials", "1"});
  EXPECT_EQ(r.code, cli::kFailure);
}

TEST(Cli, ConditionalWritesArtifacts) {
  const auto dir = scratch("conditional");
  const auto r = run({"conditional", "--fixture", "call_fig3", "--sizes", "4", "--out", dir.string()});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const auto doc = ir::deserialize(ir::read_text_file((dir / "conditional.cpqc").string()));
  ASSERT_TRUE(doc.conditional.has_value());
  EXPECT_EQ(doc.conditional->sizes, std::vector<int>{4});
  EXPECT_TRUE(fs::exists(dir / "conditional_report.json"));
}

TEST(Cli, BenchmarkVanillaScalesLinearly) {
  const auto dir = scratch("bench");
  const auto cfg = write(dir, "run.ini", "[benchmark]\nn_min = 4\nn_max = 9\n");
  const auto r = run({"benchmark", "--config", cfg.string(), "--out", dir.string()});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const auto rows = lines(dir / "benchmark_vanilla.csv");
  ASSERT_EQ(rows.size(), 1u + 2u * 6u);
  std::vector<double> n, cnot;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    std::stringstream ss(rows[i]);
    std::vector<std::string> cells;
    for (std::string c; std::getline(ss, c, ',');) cells.push_back(c);
    ASSERT_GE(cells.size(), 3u);
    if (cells[1].find("cpqc") == std::string::npos) continue;
    n.push_back(std::stod(cells[0]));
    cnot.push_back(std::stod(cells[2]));
  }
  ASSERT_EQ(n.size(), 6u);
  for (std::size_t i = 2; i < cnot.size(); ++i) {
    EXPECT_EQ(cnot[i] - cnot[i - 1], cnot[1] - cnot[0]);
  }
  EXPECT_TRUE(fs::exists(dir / "benchmark_basket.csv"));
}

TEST(Cli, TrainIsDeterministic) {
  const auto a = scratch("train_a");
  const auto b = scratch("train_b");
  const auto cfg = write(a, "run.ini", kTinySearch);
  for (const auto& dir : {a, b}) {
    const auto r = run({"train", "--config", cfg.string(), "--seed", "11", "--out", dir.string()});
    ASSERT_EQ(r.code, cli::kOk) << r.err;
  }
  for (const char* file : {"model.cpqc", "lineage.csv", "model.json"}) {
    EXPECT_EQ(ir::read_text_file((a / file).string()), ir::read_text_file((b / file).string()))
        << file;
  }
  const auto price = run({"price", "--config", cfg.string(), "--model", (a / "model.json").string(),
                          "--out", a.string()});
  EXPECT_EQ(price.code, cli::kOk) << price.err;
  EXPECT_EQ(lines(a / "prices.jsonl").size(), 3u);
}

TEST(Cli, VariableBasketTrainsThreeFeatures) {
  const auto dir = scratch("train_basket");
  const auto cfg = write(dir, "run.ini",
                         std::string("[payoff]\nkind = basket_variable\n[grid]\nqubits = 2,2\n") +
                             kTinySearch);
  const auto r = run({"train", "--config", cfg.string(), "--out", dir.string()});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const auto doc = ir::deserialize(ir::read_text_file((dir / "model.cpqc").string()));
  EXPECT_EQ(doc.circuit.num_features, 3);
}

}  // namespace
}  // namespace cpqc
