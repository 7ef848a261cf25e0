// Copyright 2026 The agectl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
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

#include "cli.hpp"

namespace agectl::cli {
namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

Run Invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.code = RunCli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

// Value of a "field,value" row.
std::string Field(const std::string& csv, const std::string& field) {
  std::istringstream in(csv);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind(field + ",", 0) == 0) return line.substr(field.size() + 1);
  }
  return "<missing>";
}

std::vector<std::string> DataRows(const std::string& csv) {
  std::istringstream in(csv);
  std::vector<std::string> rows;
  std::string line;
  bool header = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header) {
      header = true;
      continue;
    }
    rows.push_back(line);
  }
  return rows;
}

std::filesystem::path TempFile(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::path(AGECTL_TEST_TMPDIR) / name;
  std::ofstream(path) << contents;
  return path;
}

TEST(CliSolveTest, LinearCheapEnergyActivatesImmediately) {
  const auto r = Invoke({"solve", "--utility", "linear", "--M", "12", "--p", "0.54", "--G", "0.99",
                         "--P", "0", "--B", "0"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(Field(r.out, "s"), "1");
  EXPECT_EQ(Field(r.out, "s_star"), "1");
  EXPECT_EQ(Field(r.out, "always_active"), "true");
  EXPECT_LE(std::stod(Field(r.out, "gain_difference")), 1e-6);
  EXPECT_NE(r.out.find("# agectl solve"), std::string::npos);
  EXPECT_NE(r.out.find("# seed: 1"), std::string::npos);
}

TEST(CliSolveTest, StepUtilityHasTwoOptima) {
  const auto r = Invoke({"solve", "--utility", "step", "--v", "12", "--k", "3", "--M", "21",
                         "--p", "0.5", "--G", "6"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(Field(r.out, "optima"), "2 3");
}

TEST(CliSolveTest, ExitCodes) {
  EXPECT_EQ(Invoke({"solve", "--M", "1"}).code, kInput);
  EXPECT_EQ(Invoke({"solve", "--p", "1.5"}).code, kInput);
  EXPECT_EQ(Invoke({"solve", "--G", "1", "--b", "1"}).code, kInput);
  EXPECT_EQ(Invoke({"solve", "--bogus"}).code, kUsage);
  EXPECT_EQ(Invoke({"frobnicate"}).code, kUsage);
  EXPECT_EQ(Invoke({}).code, kUsage);
  const auto slow = Invoke({"solve", "--M", "20", "--p", "0.3", "--G", "2", "--max-iter", "3"});
  EXPECT_EQ(slow.code, kNonConvergence);
  EXPECT_EQ(Field(slow.out, "converged"), "false");
}

TEST(CliSolveTest, FlagsOverrideConfigFile) {
  const auto cfg = TempFile("cli_solve.cfg", "# test\nM = 12\np = 0.54\nG = 0.99\n");
  const auto from_file = Invoke({"solve", "--config", cfg.string()});
  ASSERT_EQ(from_file.code, kOk) << from_file.err;
  EXPECT_EQ(Field(from_file.out, "s_star"), "1");
  EXPECT_NE(from_file.out.find("# config: " + cfg.string()), std::string::npos);
  EXPECT_NE(from_file.out.find("# overrides: none"), std::string::npos);

  const auto overridden = Invoke({"solve", "--config", cfg.string(), "--G", "40"});
  ASSERT_EQ(overridden.code, kOk);
  EXPECT_EQ(Field(overridden.out, "s_star"), "13");
  EXPECT_NE(overridden.out.find("# overrides: --G=40"), std::string::npos);

  EXPECT_EQ(Invoke({"solve", "--config", "/nonexistent/agectl.cfg"}).code, kInput);
  const auto bad = TempFile("cli_bad.cfg", "M = twelve\n");
  EXPECT_EQ(Invoke({"solve", "--config", bad.string()}).code, kInput);
}

TEST(CliSweepTest, RowsSpanAllThresholds) {
  const auto r = Invoke({"sweep", "--M", "12", "--p", "0.54", "--b", "0.72"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto rows = DataRows(r.out);
  ASSERT_EQ(rows.size(), 13u);
  EXPECT_EQ(rows.front().substr(0, 2), "1,");
  EXPECT_EQ(rows.back().substr(0, 3), "13,");
}

TEST(CliSweepTest, SingleThreshold) {
  const auto r = Invoke({"sweep", "--M", "12", "--p", "0.54", "--s", "4"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto rows = DataRows(r.out);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].substr(0, 2), "4,");
  EXPECT_EQ(Invoke({"sweep", "--M", "12", "--s", "14"}).code, kInput);
}

TEST(CliSweepTest, EnergyGridArgmaxNonDecreasing) {
  const auto r = Invoke({"sweep", "--M", "12", "--p", "0.54", "--param", "b", "--grid",
                         "0.09,0.72,1.62,3.18"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_NE(r.out.find("# monotonicity: ok"), std::string::npos);
  EXPECT_EQ(DataRows(r.out).size(), 4u * 13u);
  EXPECT_EQ(Invoke({"sweep", "--param", "G", "--grid", "3,1"}).code, kInput);
  EXPECT_EQ(Invoke({"sweep", "--param", "Q", "--grid", "1"}).code, kUsage);
}

TEST(CliPublisherTest, SmallPopulationIncludesFullPrice) {
  const auto r = Invoke({"publisher", "--N", "20", "--T", "11", "--p", "0.54", "--M", "30",
                         "--G", "0.4", "--P", "40"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(Field(r.out, "status"), "feasible");
  EXPECT_EQ(Field(r.out, "bonus_hi"), "40");
}

TEST(CliPublisherTest, HugeCapAndInfeasible) {
  const auto loose = Invoke({"publisher", "--N", "5", "--T", "1e9", "--p", "0.54", "--M", "30",
                             "--G", "0.4", "--P", "40"});
  ASSERT_EQ(loose.code, kOk);
  EXPECT_EQ(Field(loose.out, "target_threshold"), "1");
  const auto inf = Invoke({"publisher", "--N", "1000", "--T", "1", "--p", "0.54", "--M", "30",
                           "--G", "0.4", "--P", "40"});
  EXPECT_EQ(inf.code, kOk);
  EXPECT_EQ(Field(inf.out, "status"), "infeasible");
  EXPECT_EQ(Invoke({"publisher", "--T", "1"}).code, kUsage);
  EXPECT_EQ(Invoke({"publisher", "--N", "0", "--T", "1"}).code, kInput);
}

TEST(CliLearnTest, TrajectoryHeaderAndRows) {
  const auto r = Invoke({"learn", "--preset", "main-text", "--env", "expected", "--N", "50",
                         "--drop", "20@30", "--rounds", "60"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_NE(r.out.find("round,bonus,requests,rate,users,threshold"), std::string::npos);
  EXPECT_NE(r.out.find("# optimal interval N=20: [38.8"), std::string::npos);
  EXPECT_EQ(DataRows(r.out).size(), 60u);
  EXPECT_EQ(Invoke({"learn", "--preset", "unknown"}).code, kInput);
  EXPECT_EQ(Invoke({"learn", "--drop", "twenty"}).code, kInput);
  EXPECT_EQ(Invoke({"learn", "--env", "trace"}).code, kInput);
}

TEST(CliLearnTest, SeededRunsAreByteIdentical) {
  const std::vector<std::string> args = {"learn", "--env", "analytic", "--N", "30", "--rounds", "40",
                                         "--drop", "none", "--seed", "17"};
  const auto a = Invoke(args);
  const auto b = Invoke(args);
  ASSERT_EQ(a.code, kOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("# seed: 17"), std::string::npos);
  auto other = args;
  other.back() = "18";
  EXPECT_NE(Invoke(other).out, a.out);
}

TEST(CliSimulateTest, CompareAndReplay) {
  const auto corpus = TempFile("cli_corpus.txt", "");
  const auto gen = Invoke({"gen-traces", "--shifts", "6", "-o", corpus.string()});
  ASSERT_EQ(gen.code, kOk) << gen.err;

  const auto cmp = Invoke({"simulate", "--traces", corpus.string(), "--utility", "linear", "--M", "12",
                           "--b", "0.2", "--replications", "4"});
  ASSERT_EQ(cmp.code, kOk) << cmp.err;
  const auto rows = DataRows(cmp.out);
  ASSERT_EQ(rows.size(), 6u);
  EXPECT_EQ(rows[0].substr(0, 10), "shift0000,");
  EXPECT_EQ(rows[5].substr(0, 10), "shift0005,");

  const auto mask = Invoke({"simulate", "--traces", corpus.string(), "--mode", "replay", "--mask"});
  EXPECT_EQ(mask.code, kOk) << mask.err;
  EXPECT_EQ(Invoke({"simulate", "--traces", corpus.string(), "--mode", "replay"}).code, kInput);
  const auto flat = Invoke({"simulate", "--traces", corpus.string(), "--mode", "flat", "--M", "10"});
  EXPECT_EQ(flat.code, kOk);
  EXPECT_EQ(DataRows(flat.out).size(), 11u);
}

TEST(CliSimulateTest, MissingOrBrokenTraces) {
  EXPECT_EQ(Invoke({"simulate", "--traces", "/nonexistent/missing.txt"}).code, kInput);
  const auto broken = TempFile("cli_broken.txt", "a 0101\nb 01z1\n");
  const auto r = Invoke({"simulate", "--traces", broken.string()});
  EXPECT_EQ(r.code, kInput);
  EXPECT_NE(r.err.find("line 2"), std::string::npos);
  EXPECT_EQ(Invoke({"simulate"}).code, kUsage);
}

TEST(CliGenTracesTest, SeedControlsOutput) {
  const auto a = Invoke({"gen-traces", "--shifts", "3", "--seed", "4"});
  const auto b = Invoke({"gen-traces", "--shifts", "3", "--seed", "4"});
  const auto c = Invoke({"gen-traces", "--iid", "0.5", "--slots", "50"});
  ASSERT_EQ(a.code, kOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(c.code, kOk);
  EXPECT_NE(c.out.find("iid "), std::string::npos);
  EXPECT_EQ(Invoke({"gen-traces", "--iid", "2"}).code, kInput);
}

}  // namespace
}  // namespace agectl::cli
