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

#include <cmath>

#include "agectl/analytics.hpp"
#include "agectl/publisher.hpp"
#include "agectl/threshold_search.hpp"
#include "instances.hpp"
#include "oracles.hpp"

namespace agectl {
namespace {

SystemParams MainText() {
  SystemParams params = LinearParams(0.54, 30, 0.0, 40.0);
  params.G = 0.4;
  return params;
}

TEST(MessageRateTest, Examples) {
  EXPECT_DOUBLE_EQ(MessageRateAtThreshold(1, 0.5, 10, 10), 5.0);
  EXPECT_EQ(MessageRateAtThreshold(11, 0.5, 10, 10), 0.0);
  SystemParams params = MainText();
  for (double b : {0.0, 10.0, 30.0, 40.0}) {
    params.B = b;
    const Threshold s = OptimalThreshold(params).s_star;
    EXPECT_DOUBLE_EQ(MessageRate(params, 7), 7 * SummarizeThreshold(params, s).update_rate);
  }
}

TEST(MessageRateTest, OptimalBonusRateForFiftyUsers) {
  const auto outcome = OptimalBonus(PublisherInstance{MainText(), 50, 11.0});
  ASSERT_TRUE(std::holds_alternative<BonusSolution>(outcome));
  const auto& sol = std::get<BonusSolution>(outcome);
  SystemParams at = MainText();
  at.B = 0.5 * (sol.bonus.lo + sol.bonus.hi);
  const double q = MessageRate(at, 50);
  EXPECT_GT(q, 9.0);
  EXPECT_LE(q, 11.0);
}

TEST(TargetThresholdTest, Examples) {
  EXPECT_EQ(TargetThreshold(50, 11, 0.54, 30), 4);
  EXPECT_EQ(TargetThreshold(20, 11, 0.54, 30), 1);
  EXPECT_EQ(TargetThreshold(1, 100, 0.54, 30), 1);
  EXPECT_EQ(TargetThreshold(1000, 1, 0.54, 30), 31);
}

TEST(TargetThresholdTest, MatchesLinearScan) {
  testing::InstanceGenerator gen(41);
  for (int i = 0; i < 2000; ++i) {
    const int N = gen.Int(1, 500);
    const double T = gen.Real(0.1, 60.0);
    const double p = gen.Real(0.05, 0.95);
    const int M = gen.Int(2, 50);
    EXPECT_EQ(TargetThreshold(N, T, p, M), oracle::ScanTargetThreshold(N, T, p, M));
  }
  // Exact boundary: 10 / (s + 1) = 5 at s = 1 with p = 0.5.
  EXPECT_EQ(TargetThreshold(10, 5.0, 0.5, 10), 1);
}

TEST(BonusRangeTest, IrrelevantBonusGivesFullRange) {
  // Energy alone rules out updating, whatever the bonus.
  SystemParams params = LinearParams(0.5, 10, 0.0, 4.0);
  params.G = 100;
  const Threshold s = InducedThreshold(params, 0.0);
  ASSERT_EQ(s, InducedThreshold(params, 4.0));
  const auto r = BonusRangeForThreshold(PublisherInstance{params, 5, 1.0}, s);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->lo, 0.0);
  EXPECT_EQ(r->hi, 4.0);
}

TEST(BonusRangeTest, InteriorThresholdMatchesDenseScan) {
  const PublisherInstance instance{MainText(), 50, 11.0};
  const Threshold lo_s = InducedThreshold(instance.params, 40.0);
  const Threshold hi_s = InducedThreshold(instance.params, 0.0);
  ASSERT_LT(lo_s + 1, hi_s);
  for (Threshold s = lo_s + 1; s < hi_s; ++s) {
    const auto r = BonusRangeForThreshold(instance, s);
    if (!r) continue;
    double scan_lo = 1e9, scan_hi = -1;
    const int steps = 100000;
    for (int i = 0; i <= steps; ++i) {
      const double b = 40.0 * i / steps;
      if (InducedThreshold(instance.params, b) == s) {
        scan_lo = std::min(scan_lo, b);
        scan_hi = std::max(scan_hi, b);
      }
    }
    EXPECT_NEAR(r->lo, scan_lo, 40.0 / steps + 1e-9);
    EXPECT_NEAR(r->hi, scan_hi, 40.0 / steps + 1e-9);
    EXPECT_EQ(InducedThreshold(instance.params, r->lo), s);
    EXPECT_EQ(InducedThreshold(instance.params, r->hi), s);
    if (r->lo > 0) EXPECT_NE(InducedThreshold(instance.params, r->lo - 1e-6 * 40.0), s);
  }
}

TEST(BonusRangeTest, UnreachableThresholdIsEmpty) {
  const PublisherInstance instance{MainText(), 50, 11.0};
  EXPECT_EQ(InducedThreshold(instance.params, 40.0), 1);
  SystemParams pricey = MainText();
  pricey.G = 100;
  const PublisherInstance hard{pricey, 50, 11.0};
  const Threshold floor = InducedThreshold(pricey, 40.0);
  ASSERT_GT(floor, 1);
  EXPECT_FALSE(BonusRangeForThreshold(hard, floor - 1));
}

TEST(OptimalBonusTest, SmallPopulationGetsFreeUpdates) {
  const auto outcome = OptimalBonus(PublisherInstance{MainText(), 20, 11.0});
  ASSERT_TRUE(std::holds_alternative<BonusSolution>(outcome));
  const auto& sol = std::get<BonusSolution>(outcome);
  EXPECT_EQ(sol.target, 1);
  EXPECT_EQ(sol.attained, 1);
  EXPECT_TRUE(sol.bonus.Contains(40.0));
  EXPECT_NEAR(sol.achieved_rate, 20 * 0.54, 1e-12);
  EXPECT_NEAR(sol.achieved_age, ExpectedAge(1, 0.54, 30), 1e-12);
}

TEST(OptimalBonusTest, TooManyUsersIsInfeasible) {
  const SystemParams params = MainText();
  const auto outcome = OptimalBonus(PublisherInstance{params, 1000, 1.0});
  ASSERT_TRUE(std::holds_alternative<Infeasible>(outcome));
  const auto& inf = std::get<Infeasible>(outcome);
  EXPECT_GT(inf.target, InducedThreshold(params, 40.0));
  EXPECT_EQ(inf.max_threshold, InducedThreshold(params, 0.0));
}

TEST(OptimalBonusTest, LooseBudgetReachesLowestThreshold) {
  const SystemParams params = MainText();
  const auto outcome = OptimalBonus(PublisherInstance{params, 5, 1e6});
  ASSERT_TRUE(std::holds_alternative<BonusSolution>(outcome));
  const auto& sol = std::get<BonusSolution>(outcome);
  EXPECT_EQ(sol.target, 1);
  EXPECT_EQ(sol.attained, InducedThreshold(params, 40.0));
  EXPECT_EQ(sol.bonus.hi, 40.0);
}

TEST(OptimalBonusTest, IgnoresThresholdsSeenOnlyInsideTieWindow) {
  // E[r;1] = (B - 0.5) / 2, E[r;2] = (B - 0.5) / 3 and E[r;3] = 0 all vanish
  // at B = 0.5, so s = 2 is never the smallest exact optimum.
  SystemParams params = LinearParams(0.5, 2, 0.25, 1.0);
  EXPECT_NEAR(ExpectedRewardThreshold(params, 1), -0.25, 1e-15);
  EXPECT_NEAR(ExpectedRewardThreshold(params, 2), -1.0 / 6.0, 1e-15);
  const auto outcome = OptimalBonus(PublisherInstance{params, 6, 2.5});
  ASSERT_TRUE(std::holds_alternative<BonusSolution>(outcome));
  const auto& sol = std::get<BonusSolution>(outcome);
  EXPECT_EQ(sol.target, 2);
  EXPECT_EQ(sol.attained, 3);
  EXPECT_EQ(sol.bonus.lo, 0.0);
  EXPECT_NEAR(sol.bonus.hi, 0.5, 1e-8);
  EXPECT_EQ(sol.achieved_rate, 0.0);
}

TEST(OptimalBonusTest, MatchesGridScanOnRandomInstances) {
  testing::InstanceGenerator gen(42);
  int checked = 0;
  while (checked < 20) {
    SystemParams params = gen.WifiOnly(20);
    if (params.P <= 0) continue;
    params.B = 0;
    const int N = gen.Int(1, 200);
    const Threshold s0 = InducedThreshold(params, 0.0);
    if (s0 > params.M) continue;
    const Threshold pick = gen.Int(1, s0);
    const double T = N * UpdateRate(pick, params.p) * gen.Real(1.0, 1.2);
    const auto outcome = OptimalBonus(PublisherInstance{params, N, T});
    ASSERT_TRUE(std::holds_alternative<BonusSolution>(outcome));
    const auto& sol = std::get<BonusSolution>(outcome);
    double best_age = 1e300;
    for (int i = 0; i <= 10000; ++i) {
      const double b = params.P * i / 10000.0;
      const Threshold s = InducedThreshold(params, b);
      if (MessageRateAtThreshold(s, params.p, params.M, N) <= T) {
        best_age = std::min(best_age, ExpectedAgeOrSaturated(s, params.p, params.M));
      }
    }
    // The grid can step over a narrow interval, never the other way round.
    EXPECT_LE(sol.achieved_age, best_age + 1e-12);
    EXPECT_EQ(InducedThreshold(params, 0.5 * (sol.bonus.lo + sol.bonus.hi)), sol.attained);
    EXPECT_LE(sol.achieved_rate, T + 1e-9);
    ++checked;
  }
}

TEST(OptimalBonusTest, InducedThresholdNonIncreasingInBonus) {
  testing::InstanceGenerator gen(43);
  for (int i = 0; i < 100; ++i) {
    SystemParams params = gen.WifiOnly();
    Threshold last = params.M + 1;
    for (int j = 0; j <= 200; ++j) {
      const Threshold s = InducedThreshold(params, params.P * j / 200.0);
      EXPECT_LE(s, last);
      last = s;
    }
  }
}

TEST(OptimalBonusTest, RejectsBadInstance) {
  EXPECT_THROW(OptimalBonus(PublisherInstance{MainText(), 0, 11.0}), std::invalid_argument);
  EXPECT_THROW(OptimalBonus(PublisherInstance{MainText(), 10, 0.0}), std::invalid_argument);
}

}  // namespace
}  // namespace agectl
