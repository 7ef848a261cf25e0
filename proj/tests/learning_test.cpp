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

#include <sstream>

#include "agectl/learning.hpp"
#include "agectl/publisher.hpp"

namespace agectl {
namespace {

BonusInterval OptimalRange(const LearningPreset& preset, int N) {
  const auto outcome =
      OptimalBonus(PublisherInstance{preset.params, N, preset.config.target});
  return std::get<BonusSolution>(outcome).bonus;
}

TEST(LearningStepTest, Examples) {
  LearningConfig config;
  EXPECT_DOUBLE_EQ(LearningStep(1, 10.0, 5.0, config), 16.0);
  EXPECT_DOUBLE_EQ(LearningStep(2, 10.0, 5.0, config), 13.0);
  EXPECT_DOUBLE_EQ(LearningStep(1, 38.0, 0.0, config), 40.0);
  EXPECT_DOUBLE_EQ(LearningStep(1, 3.0, 30.0, config), 0.0);
  EXPECT_DOUBLE_EQ(LearningStep(7, 12.5, 11.0, config), 12.5);
  EXPECT_THROW(LearningStep(0, 1.0, 1.0, config), std::invalid_argument);
}

TEST(LearningStepTest, StaysInsideBounds) {
  LearningConfig config;
  config.alpha = 50;
  for (int t = 1; t < 50; ++t) {
    for (double q : {0.0, 3.0, 11.0, 40.0, 1000.0}) {
      const double b = LearningStep(t, 20.0, q, config);
      EXPECT_GE(b, 0.0);
      EXPECT_LE(b, config.max_bonus);
    }
  }
}

TEST(RunLearningTest, ExpectedEnvironmentEntersOptimalRange) {
  const LearningPreset preset = PresetByName("main-text");
  for (int N : {50, 20}) {
    LearningConfig config = preset.config;
    config.max_rounds = 200;
    const auto traj = RunLearning(ExpectedRateOracle(preset.params, N, config.tau), config);
    const auto report = MakeConvergenceReport(traj.rounds, OptimalRange(preset, N));
    ASSERT_TRUE(report.entry_round) << "N=" << N;
    EXPECT_LE(*report.entry_round, 20) << "N=" << N;
  }
}

TEST(RunLearningTest, LooseToleranceStopsAfterOneRound) {
  LearningConfig config;
  config.epsilon = 1e9;
  int calls = 0;
  const auto traj = RunLearning([&](double) { return ++calls, 500.0; }, config);
  EXPECT_EQ(calls, 1);
  EXPECT_TRUE(traj.converged);
  ASSERT_EQ(traj.rounds.size(), 1u);
  EXPECT_DOUBLE_EQ(traj.rounds[0].rate, 5.0);
  EXPECT_DOUBLE_EQ(traj.final_bonus, config.initial_bonus);
}

TEST(RunLearningTest, ExactHitConverges) {
  LearningConfig config;
  config.tau = 10;
  const auto traj = RunLearning([](double b) { return b < 30 ? 110.0 : 0.0; }, config);
  EXPECT_FALSE(traj.converged);
  EXPECT_EQ(traj.rounds.size(), static_cast<std::size_t>(config.max_rounds));

  const auto hit = RunLearning([](double) { return 110.0; }, config);
  EXPECT_TRUE(hit.converged);
  EXPECT_EQ(hit.rounds.size(), 1u);
}

TEST(RunLearningTest, RejectsBadConfig) {
  LearningConfig config;
  config.alpha = 0;
  EXPECT_THROW(RunLearning([](double) { return 0.0; }, config), std::invalid_argument);
  config = {};
  config.initial_bonus = 41;
  EXPECT_THROW(config.Validate(), std::invalid_argument);
  config = {};
  config.tau = 0;
  EXPECT_THROW(config.Validate(), std::invalid_argument);
}

TEST(ConvergenceReportTest, EntryIsFirstRoundOfFinalStay) {
  std::vector<LearningRound> rounds = {
      {1, 40, 0, 1.0}, {2, 20, 0, 2.0}, {3, 50, 0, 3.0}, {4, 25, 0, 4.0}, {5, 22, 0, 6.0}};
  const auto report = MakeConvergenceReport(rounds, BonusInterval{20, 30});
  ASSERT_TRUE(report.entry_round);
  EXPECT_EQ(*report.entry_round, 4);
  EXPECT_DOUBLE_EQ(report.tail_rate_min, 4.0);
  EXPECT_DOUBLE_EQ(report.tail_rate_max, 6.0);
}

TEST(ConvergenceReportTest, NeverEnteredUsesSecondHalf) {
  std::vector<LearningRound> rounds = {
      {1, 40, 0, 1.0}, {2, 40, 0, 2.0}, {3, 40, 0, 3.0}, {4, 40, 0, 9.0}};
  const auto report = MakeConvergenceReport(rounds, BonusInterval{0, 10});
  EXPECT_FALSE(report.entry_round);
  EXPECT_DOUBLE_EQ(report.tail_rate_min, 3.0);
  EXPECT_DOUBLE_EQ(report.tail_rate_max, 9.0);
}

TEST(PresetTest, Known) {
  const auto main = PresetByName("main-text");
  EXPECT_EQ(main.params.M, 30);
  EXPECT_DOUBLE_EQ(main.params.p, 0.54);
  EXPECT_DOUBLE_EQ(main.params.G, 0.4);
  EXPECT_DOUBLE_EQ(main.params.P, 40.0);
  EXPECT_EQ(main.config.tau, 100);
  EXPECT_EQ(main.initial_users, 50);
  EXPECT_EQ(main.later_users, 20);
  EXPECT_DOUBLE_EQ(main.config.initial_bonus, main.config.max_bonus);

  const auto app = PresetByName("appendix");
  EXPECT_DOUBLE_EQ(app.config.max_bonus, 100.0);
  EXPECT_EQ(app.config.tau, 10);
  EXPECT_DOUBLE_EQ(app.config.alpha, 20.0);
  EXPECT_DOUBLE_EQ(PresetByName("appendix", true).config.alpha, 10.0);
  EXPECT_EQ(app.initial_users, 105);
  EXPECT_EQ(app.later_users, 90);

  EXPECT_THROW(PresetByName("nope"), std::invalid_argument);
}

TEST(TrajectoryCsvTest, HeaderAndRows) {
  std::ostringstream out;
  WriteTrajectoryCsv(out, {{1, 40, 500, 5}, {2, 36.5, 1100, 11}});
  EXPECT_EQ(out.str(), "round,bonus,requests,rate\n1,40,500,5\n2,36.5,1100,11\n");
}

}  // namespace
}  // namespace agectl
