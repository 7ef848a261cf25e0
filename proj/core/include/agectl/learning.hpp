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

// Online bonus controller: projected stochastic approximation driven by the
// observed number of served requests per round. Needs neither N nor the
// users' strategies.

#pragma once

#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "agectl/publisher.hpp"

namespace agectl {

struct LearningConfig {
  double max_bonus = 40.0;   // B-hat
  double target = 11.0;      // T, messages per slot
  int tau = 100;             // slots per round
  double alpha = 1.0;        // learning rate
  double epsilon = 1e-6;     // stop once |T - Q_t| <= epsilon
  double initial_bonus = 40.0;
  int max_rounds = 1000;

  void Validate() const;
};

struct LearningRound {
  int t = 0;             // 1-based round index
  double bonus = 0.0;    // B_t in force during the round
  double requests = 0.0; // R_t
  double rate = 0.0;     // Q_t = R_t / tau
};

struct LearningTrajectory {
  std::vector<LearningRound> rounds;
  bool converged = false;
  double final_bonus = 0.0;  // bonus after the last update
  double final_gap = 0.0;    // |T - Q_t| of the last round
};

// Served requests during one round played at the given bonus.
using RoundOracle = std::function<double(double bonus)>;

// B_{t+1} = min(B-hat, max(0, B_t + alpha (T - Q_t) / t)), t >= 1.
double LearningStep(int t, double bonus, double rate, const LearningConfig& config);

// Runs rounds until |T - Q_t| <= epsilon or max_rounds is exhausted.
LearningTrajectory RunLearning(const RoundOracle& env, const LearningConfig& config);

// Noise-free environment: R = tau * message rate at s*(B).
RoundOracle ExpectedRateOracle(const SystemParams& params, int N, int tau);

struct ConvergenceReport {
  // First round t such that B_t and every later B_t lie in the range.
  std::optional<int> entry_round;
  // Q_t band over the tail (rounds from entry on, or the second half of the
  // trajectory if the range is never entered).
  double tail_rate_min = 0.0;
  double tail_rate_max = 0.0;
};

ConvergenceReport MakeConvergenceReport(const std::vector<LearningRound>& rounds,
                                        const BonusInterval& range);

// CSV with header round,bonus,requests,rate.
void WriteTrajectoryCsv(std::ostream& out, const std::vector<LearningRound>& rounds);

// Named experiment setups. Population changes are applied by the population
// simulator; the controller itself never resets.
struct LearningPreset {
  std::string name;
  SystemParams params;  // p, M, G, P (B is the controlled variable)
  LearningConfig config;
  int initial_users = 0;
  int later_users = 0;
  int change_round = 0;  // first round played with later_users
  int rounds = 0;
};

// "main-text": alpha=1, tau=100, p=0.54, M=30, G=0.4, P=B-hat=40, T=11,
// N=50 dropping to 20 at round 200, 400 rounds.
// "appendix": alpha=20 (10 with traces), tau=10, M=30, G=0.4, P=B-hat=100,
// T=11, N=105 dropping to 90 at round 100, 200 rounds.
LearningPreset PresetByName(const std::string& name, bool trace_driven = false);

}  // namespace agectl
