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

// Optimal threshold characterizations built on the closed-form rewards.

#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "agectl/analytics.hpp"
#include "agectl/model.hpp"

namespace agectl {

struct ThresholdResult {
  Threshold s_star = 0;                // smallest optimal threshold
  double reward = 0.0;                 // E[r; s_star]
  std::vector<Threshold> all_optima;   // ascending, within kRewardTieTolerance of the max
  bool always_active = false;          // closed-form always-active condition
  bool always_inactive = false;        // closed-form always-inactive condition
  bool used_fallback = false;          // step search fell back to a full sweep
};

// E[r; s] for s = 1..M+1; element s - 1 holds threshold s.
std::vector<double> ThresholdRewardCurve(const SystemParams& params);

// Full sweep over [1, M+1] in the WiFi-only regime.
ThresholdResult OptimalThreshold(const SystemParams& params);

// min{ s : E[r; s] >= E[r; s+1] } with E[r; M+2] treated as -infinity.
Threshold FirstCrossingThreshold(const SystemParams& params);

bool AlwaysActive(const SystemParams& params);
bool AlwaysInactive(const SystemParams& params);

// Stationary point of E[r; s] on the geometric branch of a step utility,
// expressed through the Lambert function. Empty if the utility is not a
// step or the expression is undefined.
std::optional<double> StepCriticalPoint(const SystemParams& params);

// Evaluates E[r; s] on {1, k-1, floor(phi), ceil(phi), M, M+1} and returns
// the best candidate (ties to the smaller s). Falls back to a full sweep,
// flagged in the result, when phi is undefined. Requires a step utility.
ThresholdResult StepUtilityThreshold(const SystemParams& params);

struct OptimaEnumeration {
  std::vector<Threshold> optima;  // every maximizer of E[r; s], ascending
  bool degenerate = false;        // three or more optima
  // Independent closed-form test for three or more optima; agrees with
  // `degenerate` whenever the tie tolerance resolves the sweep.
  bool multiplicity_condition = false;
};

OptimaEnumeration EnumerateOptimalThresholds(const SystemParams& params);

// True iff some m < M-1 has sum_{x<m} U(x) = G/p + P - B and U(x) = 0 for x > m.
bool MultiplicityConditionHolds(const SystemParams& params, double tolerance = kRewardTieTolerance);

struct TwoThresholdResult {
  Threshold s_wifi = 0;  // M+1 when WiFi is never used on its own
  Threshold s_3g = 0;    // M+1 when 3G is never used
  double reward = 0.0;
};

// Optimal (s_W, s_3G). With P3G <= G/p + P only 3G-only policies
// (s_W = s_3G) are searched; otherwise the full pair grid, the WiFi-only
// family and always-inactive. Requires a finite 3G price.
TwoThresholdResult OptimalTwoThresholds(const SystemParams& params);

enum class SweepParameter { kG, kP, kB };

std::string ToString(SweepParameter parameter);
SweepParameter SweepParameterFromString(const std::string& name);

struct MonotonicityReport {
  SweepParameter parameter = SweepParameter::kG;
  std::vector<double> grid;
  std::vector<Threshold> thresholds;
  // Index i such that thresholds[i], thresholds[i + 1] violate the expected
  // direction (non-decreasing in G and P, non-increasing in B).
  std::optional<std::size_t> first_violation;

  bool ok() const { return !first_violation; }
};

// Sweeps one parameter over an ascending grid and records s*.
MonotonicityReport MonotonicityCheck(const SystemParams& params, SweepParameter parameter,
                                     std::span<const double> grid);

}  // namespace agectl
