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

// Closed-form steady-state, reward and age expressions for threshold and
// two-threshold policies. Every sum is evaluated term by term.

#pragma once

#include <vector>

#include "agectl/model.hpp"

namespace agectl {

// Stationary distribution over ages 1..M.
struct SteadyState {
  std::vector<double> pi;

  double operator[](Age x) const { return pi[static_cast<std::size_t>(x - 1)]; }
  int M() const { return static_cast<int>(pi.size()); }
};

struct ChainSummary {
  double gain = 0.0;         // expected reward per slot
  double age = 0.0;          // expected age
  double update_rate = 0.0;  // fraction of slots with an update (pi_1)
};

// Ties between rewards are detected with this absolute tolerance.
inline constexpr double kRewardTieTolerance = 1e-9;

// pi_1 = 1 / (s + (1-p)/p) for a WiFi threshold s in [1, M].
double UpdateRate(Threshold s, double p);

// Stationary distribution of the WiFi threshold-s chain. Rejects s = M+1:
// that chain is absorbed at M and is summarized separately.
SteadyState SteadyStateThreshold(Threshold s, double p, int M);

// E[r; s] for the WiFi-only threshold policy. Returns 0 for s = M+1.
double ExpectedRewardThreshold(const SystemParams& params, Threshold s);

// Expected age under WiFi threshold s in [1, M]; valid for p in (0, 1].
double ExpectedAge(Threshold s, double p, int M);

// Expected age for any s in [1, M+1]; always-inactive saturates at M.
double ExpectedAgeOrSaturated(Threshold s, double p, int M);

// Gain, age and update rate of WiFi threshold s in [1, M+1].
ChainSummary SummarizeThreshold(const SystemParams& params, Threshold s);

// E[r; s_W, s_3G] for 1 <= s_W <= s_3G <= M. Requires 3G to be available.
double ExpectedRewardTwoThreshold(const SystemParams& params, Threshold s_wifi, Threshold s_3g);

// Reward of the 3G-only policy (inactive below s_3G, action 2 from s_3G on)
// for s_3G in [1, M+1]; 0 for s_3G = M+1.
double ExpectedReward3GOnly(const SystemParams& params, Threshold s_3g);

// Expected age of the 3G-only policy: (s_3G + 1)/2, or M when s_3G = M+1.
double ExpectedAge3GOnly(Threshold s_3g, int M);

}  // namespace agectl
