// Copyright 2026 The quaketail Authors.
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
#include <map>
#include <sstream>

#include "commands.hpp"
#include "quaketail/csv.hpp"

namespace quaketail::app {
namespace {

namespace fs = std::filesystem;

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() / (std::string("quaketail_cli_") + info->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  int call(std::vector<std::string> args) {
    args.insert(args.begin(), "quaketail");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    out_.str("");
    err_.str("");
    return run(static_cast<int>(argv.size()), argv.data(), out_, err_);
  }

  fs::path path(const std::string& name) const { return dir_ / name; }
  std::string d() const { return dir_.string(); }

  // simulate -> decluster -> fit in dir_.
  void pipeline(const std::string& n = "400") {
    ASSERT_EQ(call({"simulate", "--gompertz", "1.2,0.3", "--n", n, "--out-dir", d()}), 0)
        << err_.str();
    ASSERT_EQ(call({"decluster", "--input", path("simulated_catalog.csv").string(), "--out-dir",
                    d()}),
              0)
        << err_.str();
    ASSERT_EQ(call({"fit", "--out-dir", d()}), 0) << err_.str();
  }

  // Data rows of a CSV with '#' comments stripped, header included.
  std::vector<std::vector<std::string>> rows(const std::string& name) const {
    std::istringstream in(slurp(path(name)));
    std::vector<std::vector<std::string>> out;
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      out.push_back(csv::split(line));
    }
    return out;
  }

  fs::path dir_;
  std::ostringstream out_, err_;
};

TEST_F(Cli, SimulateIsByteReproducible) {
  ASSERT_EQ(call({"simulate", "--n", "300", "--seed", "9", "--out-dir", d() + "/a"}), 0);
  ASSERT_EQ(call({"simulate", "--n", "300", "--seed", "9", "--out-dir", d() + "/b"}), 0);
  for (const auto* f : {"simulated_pairs.csv", "simulated_catalog.csv", "manifest.json"}) {
    EXPECT_EQ(slurp(path(std::string("a/") + f)), slurp(path(std::string("b/") + f))) << f;
  }
  ASSERT_EQ(call({"simulate", "--n", "300", "--seed", "10", "--out-dir", d() + "/c"}), 0);
  EXPECT_NE(slurp(path("a/simulated_pairs.csv")), slurp(path("c/simulated_pairs.csv")));
}

TEST_F(Cli, ManifestRoundTripsLaw) {
  ASSERT_EQ(call({"simulate", "--a", "0.25", "--b", "0.9", "--c", "0.5", "--p", "1.3", "--n", "50",
                  "--out-dir", d()}),
            0);
  const auto j = Json::parse(slurp(path("manifest.json")));
  const auto law = law_from_json(j.at("law"));
  EXPECT_EQ(law.a(), 0.25);
  EXPECT_EQ(law.b(), 0.9);
  EXPECT_EQ(law.c(), 0.5);
  EXPECT_EQ(law.p(), 1.3);
  EXPECT_EQ(j.at("meta").at("seed").get<std::uint64_t>(), 1u);
}

TEST_F(Cli, InvalidLawIsUsageError) {
  EXPECT_EQ(call({"simulate", "--p", "1.0", "--out-dir", d()}), 2);
  EXPECT_NE(err_.str().find("p must exceed 1"), std::string::npos) << err_.str();
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(call({}), 2);
  EXPECT_EQ(call({"nonsense"}), 2);
  EXPECT_EQ(call({"fit", "--k", "many"}), 2);
  EXPECT_EQ(call({"decluster", "--out-dir", d()}), 2);
  EXPECT_EQ(call({"--help"}), 0);
}

TEST_F(Cli, BadColumnMappingExitsTwo) {
  ASSERT_EQ(call({"simulate", "--n", "20", "--out-dir", d()}), 0);
  EXPECT_EQ(call({"decluster", "--input", path("simulated_catalog.csv").string(),
                  "--schema.col.magnitude", "mw", "--out-dir", d()}),
            2);
  EXPECT_NE(err_.str().find("mw"), std::string::npos);
}

TEST_F(Cli, MissingFilesAreRuntimeErrors) {
  EXPECT_EQ(call({"decluster", "--input", path("nope.csv").string(), "--out-dir", d()}), 1);
  EXPECT_EQ(call({"fit", "--out-dir", d()}), 1);
  EXPECT_EQ(call({"tailprob", "--out-dir", d()}), 1);
}

TEST_F(Cli, EmptyFilteredCatalog) {
  ASSERT_EQ(call({"simulate", "--n", "20", "--out-dir", d()}), 0);
  const auto before = slurp(path("simulated_catalog.csv"));
  ASSERT_EQ(call({"decluster", "--input", path("simulated_catalog.csv").string(), "--region",
                  "80,85,0,10", "--out-dir", d()}),
            0);
  EXPECT_NE(err_.str().find("warning"), std::string::npos);
  const auto summary = Json::parse(slurp(path("summary.json")));
  EXPECT_EQ(summary.at("n").get<int>(), 0);
  EXPECT_TRUE(Json::parse(slurp(path("events.json"))).at("events").empty());
  EXPECT_EQ(rows("pairs.csv").size(), 1u);
  EXPECT_EQ(slurp(path("simulated_catalog.csv")), before);
  EXPECT_EQ(call({"fit", "--out-dir", d()}), 1);
  EXPECT_NE(err_.str().find("no observed"), std::string::npos);
}

TEST_F(Cli, FitIsDeterministicAndRecordsSeeds) {
  pipeline();
  const auto first = slurp(path("fit.json"));
  ASSERT_EQ(call({"fit", "--out-dir", d()}), 0);
  EXPECT_EQ(slurp(path("fit.json")), first);
  const auto j = Json::parse(first);
  EXPECT_EQ(j.at("meta").at("seed").get<int>(), 1);
  EXPECT_EQ(j.at("seeds").at("ties").at("stream").get<int>(), 2);
  EXPECT_TRUE(j.at("gof").contains("margin_y"));
  const double beta = j.at("parametric").at("model").at("gap").at("beta").get<double>();
  EXPECT_GT(beta, 0.0);
  ASSERT_EQ(call({"fit", "--out-dir", d(), "--seed", "2"}), 0);
  EXPECT_NE(slurp(path("fit.json")), first);
}

TEST_F(Cli, TailProbRows) {
  pipeline();
  ASSERT_EQ(call({"tailprob", "--out-dir", d(), "--query", "4.95,-inf", "--query", "6.5,5.5",
                  "--query", "6.5,5.5", "--query", "4.0,3.0"}),
            0)
      << err_.str();
  const auto r = rows("tailprob.csv");
  ASSERT_EQ(r.size(), 5u);
  EXPECT_EQ(r[0][0], "s");
  EXPECT_EQ(r[1][2], "1");
  EXPECT_EQ(r[2], r[3]);
  EXPECT_TRUE(r[4][2].empty());
  EXPECT_TRUE(r[4][3].empty());
  EXPECT_FALSE(r[4][7].empty());
  EXPECT_NE(slurp(path("tailprob.csv")).find("conditional"), std::string::npos);
  ASSERT_EQ(call({"tailprob", "--out-dir", d()}), 0);
  EXPECT_EQ(rows("tailprob.csv").size(), 11u);
  EXPECT_EQ(call({"tailprob", "--out-dir", d(), "--query", "6.5"}), 2);
}

TEST_F(Cli, LevelCurvesFourteenBlocks) {
  pipeline();
  ASSERT_EQ(call({"level-curves", "--out-dir", d(), "--x-step", "0.25"}), 0) << err_.str();
  std::map<std::pair<std::string, std::string>, std::map<std::string, double>> blocks;
  for (const auto* f : {"level_curves_parametric.csv", "level_curves_evt.csv"}) {
    const auto r = rows(f);
    ASSERT_EQ(r[0], (std::vector<std::string>{"route", "p", "x", "y", "adjusted"}));
    for (std::size_t i = 1; i < r.size(); ++i) blocks[{r[i][0], r[i][1]}][r[i][2]] = std::stod(r[i][3]);
  }
  EXPECT_EQ(blocks.size(), 14u);
  for (const auto* route : {"parametric", "evt"}) {
    for (std::size_t i = 1; i < kDefaultLevels.size(); ++i) {
      const auto& lower = blocks[{route, format_number(kDefaultLevels[i - 1])}];
      const auto& upper = blocks[{route, format_number(kDefaultLevels[i])}];
      for (const auto& [x, y] : lower) {
        if (upper.count(x)) {
          EXPECT_GT(upper.at(x), y) << route << ' ' << x;
        }
      }
    }
  }
}

TEST_F(Cli, DiagnoseK) {
  pipeline();
  ASSERT_EQ(call({"diagnose-k", "--out-dir", d(), "--k-lo", "10", "--k-hi", "30"}), 0);
  const auto k = rows("k_diagnostic.csv");
  EXPECT_EQ(k.size(), 1u + 3u * 21u);
  const auto r = rows("r_curve.csv");
  EXPECT_EQ(r.size(), 1u + 250u);
  EXPECT_EQ(r[0], (std::vector<std::string>{"x", "r_hat", "r_hat_smoothed"}));
}

TEST_F(Cli, GofOutputs) {
  pipeline();
  ASSERT_EQ(call({"gof", "--out-dir", d()}), 0) << err_.str();
  const auto j = Json::parse(slurp(path("gof.json")));
  const auto fit = Json::parse(slurp(path("fit.json")));
  EXPECT_EQ(j.at("margin_x"), fit.at("gof").at("margin_x"));
  EXPECT_EQ(j.at("gap"), fit.at("gof").at("gap"));
  EXPECT_EQ(rows("gof_scatter.csv").size(), 401u);
  EXPECT_GT(rows("gof_density.csv").size(), 1000u);
}

TEST_F(Cli, EveryArtifactCarriesSeedAndHash) {
  pipeline();
  ASSERT_EQ(call({"tailprob", "--out-dir", d()}), 0);
  ASSERT_EQ(call({"level-curves", "--out-dir", d(), "--x-step", "0.5"}), 0);
  ASSERT_EQ(call({"diagnose-k", "--out-dir", d()}), 0);
  ASSERT_EQ(call({"gof", "--out-dir", d()}), 0);
  int checked = 0;
  for (const auto& entry : fs::directory_iterator(dir_)) {
    const auto text = slurp(entry.path());
    EXPECT_NE(text.find("seed"), std::string::npos) << entry.path();
    EXPECT_NE(text.find("config"), std::string::npos) << entry.path();
    EXPECT_NE(text.find("0.1.0"), std::string::npos) << entry.path();
    ++checked;
  }
  EXPECT_EQ(checked, 16);
}

TEST_F(Cli, ConfigHashIgnoresPaths) {
  RunConfig a, b;
  b.out_dir = "/elsewhere";
  b.input = "other.csv";
  EXPECT_EQ(a.config_hash(), b.config_hash());
  b.k = 41;
  EXPECT_NE(a.config_hash(), b.config_hash());
}

}  // namespace
}  // namespace quaketail::app
