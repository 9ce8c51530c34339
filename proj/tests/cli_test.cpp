// Copyright 2026 The aqedst Authors
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

// Drives the aqedst binary end to end and checks the exit-code contract.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "aqedst/edst_builder.hpp"
#include "aqedst/io.hpp"
#include "gtest/gtest.h"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(AQEDST_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("aqedst_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::filesystem::path dir_;
};

TEST_F(CliTest, BuildThenVerify) {
  const auto file = path("d5.json");
  EXPECT_EQ(run("build -n 5 -o " + file).code, 0);
  const auto v = run("verify " + file);
  EXPECT_EQ(v.code, 0);
  EXPECT_NE(v.out.find("PASS"), std::string::npos);

  const auto j = run("verify --json " + file);
  EXPECT_EQ(j.code, 0);
  EXPECT_EQ(nlohmann::json::parse(j.out)["passed"], true);
}

TEST_F(CliTest, BuildToStdoutMatchesLibrary) {
  const auto r = run("build -n 4");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(aqedst::import_json(r.out), aqedst::build(4));
  EXPECT_EQ(run("build -n 4").out, r.out);
}

TEST_F(CliTest, VerifyFailureExitsOne) {
  auto j = nlohmann::json::parse(aqedst::export_json(aqedst::build(4)));
  auto edge = j["trees"][0][0];
  j["trees"][0].erase(0);
  j["trees"][1].push_back(edge);
  const auto file = path("bad.json");
  std::ofstream(file) << j.dump();
  const auto r = run("verify " + file);
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("FAIL"), std::string::npos);
  // Importing it for export is a verification failure as well.
  EXPECT_EQ(run("export --format dot -i " + file).code, 1);
}

TEST_F(CliTest, UsageErrorsExitTwo) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("build").code, 2);
  EXPECT_EQ(run("build -n 2").code, 2);
  EXPECT_EQ(run("build -n 99").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("export --format png -n 3").code, 2);
  EXPECT_EQ(run("verify " + path("missing.json")).code, 2);
  EXPECT_EQ(run("simulate -n 3 -k 25").code, 2);
  EXPECT_EQ(run("simulate -n 5 -k 3 --exhaustive --budget 10").code, 2);
  EXPECT_EQ(run("simulate -n 3 -k 1 --exhaustive --trials 5").code, 2);
  const auto file = path("junk.json");
  std::ofstream(file) << "{\"schema_version\": 1";
  EXPECT_EQ(run("verify " + file).code, 2);
  EXPECT_EQ(run("--help").code, 0);
}

TEST_F(CliTest, ExportFormats) {
  const auto dot = run("export --format dot -n 3");
  ASSERT_EQ(dot.code, 0);
  EXPECT_EQ(dot.out, aqedst::export_dot(aqedst::build(3)));
  const auto graph = run("export --format dot --graph -n 2");
  ASSERT_EQ(graph.code, 0);
  EXPECT_EQ(graph.out, aqedst::export_dot(aqedst::build_aq(2)));

  const auto file = path("d3.json");
  ASSERT_EQ(run("build -n 3 -o " + file).code, 0);
  const auto js = run("export --format json -i " + file);
  ASSERT_EQ(js.code, 0);
  EXPECT_EQ(aqedst::import_json(js.out), aqedst::build(3));
}

TEST_F(CliTest, Simulate) {
  const auto ex = run("simulate -n 4 -k 2 --exhaustive");
  ASSERT_EQ(ex.code, 0);
  const auto j = nlohmann::json::parse(ex.out);
  EXPECT_EQ(j["passed"], true);
  EXPECT_EQ(j["subsets"], 1540);

  const auto mc = run("simulate -n 5 -k 3 --trials 2000 --seed 42 --source 00101");
  ASSERT_EQ(mc.code, 0);
  const auto m = nlohmann::json::parse(mc.out);
  EXPECT_EQ(m["intact_fraction"], 1.0);
  EXPECT_EQ(m["source"], "00101");
  EXPECT_EQ(run("simulate -n 5 -k 3 --trials 2000 --seed 42 --source 00101").out, mc.out);

  // Two failures at n = 3 can disconnect both trees.
  EXPECT_EQ(run("simulate -n 3 -k 2 --exhaustive").code, 1);
}

TEST_F(CliTest, Stats) {
  const auto r = run("stats -n 3");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["vertices"], 8);
  EXPECT_EQ(j["edges"], 20);
  EXPECT_EQ(j["min_degree"], 5);
  EXPECT_EQ(j["diameter"], 2);
  EXPECT_EQ(j["max_edst_upper_bound"], 2);
  const auto big = nlohmann::json::parse(run("stats -n 14").out);
  EXPECT_TRUE(big["diameter"].is_null());
  EXPECT_EQ(big["edges"], 27 * 8192);
}

}  // namespace
