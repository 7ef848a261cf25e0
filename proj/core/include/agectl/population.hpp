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

// Closed-loop multi-user experiments: users best-respond to the bonus in
// force each round, optionally with the online controller adjusting it.

#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

#include "agectl/learning.hpp"
#include "agectl/model.hpp"
#include "agectl/trace.hpp"

namespace agectl {

struct PopulationUser {
  // Index into the trace list; absent means i.i.d. Bernoulli(p) contacts.
  std::optional<std::size_t> trace;
  // Starting slot within the trace; replay wraps around.
  std::size_t phase = 0;
};

// From round `round` on, only the first `users` users take part.
struct PopulationChange {
  int round = 1;
  int users = 0;
};

struct PopulationOptions {
  int tau = 100;
  int rounds = 1;
  // Bonus of the first round, and of every round without a controller.
  double bonus = 0.0;
  std::optional<LearningConfig> controller;
  std::vector<PopulationChange> changes;
  // Restart the controller's step counter at each change.
  bool reset_on_change = false;
  std::uint64_t seed = 1;
  Age initial_age = 1;
  bool record_ages = false;
};

struct PopulationRound {
  int t = 0;
  int users = 0;
  double bonus = 0.0;
  double requests = 0.0;
  double rate = 0.0;
  Threshold threshold = 1;
};

struct UserOutcome {
  double total_reward = 0.0;
  std::size_t slots = 0;
  std::size_t updates = 0;
  double mean_age = 0.0;
  std::vector<Age> ages;  // age at the start of every played slot, with record_ages
};

struct PopulationResult {
  std::vector<PopulationRound> rounds;
  std::vector<UserOutcome> users;
};

// Deterministic given the options' seed and the users' phases. Each round,
// every participating user plays tau slots with threshold s*(B_t); the
// served updates form R_t. The controller's epsilon stop is not applied: the
// experiment always runs the requested number of rounds.
PopulationResult SimulatePopulation(const std::vector<PopulationUser>& users,
                                    const std::vector<ContactTrace>& traces,
                                    const SystemParams& params, const PopulationOptions& options);

// Noise-free counterpart with the same round structure: R_t is tau times
// the expected message rate of the participating users at s*(B_t). No
// per-user results are produced.
PopulationResult SimulateExpectedPopulation(int users, const SystemParams& params,
                                            const PopulationOptions& options);

// N users with i.i.d. contacts whose chains persist across calls: a
// stochastic round oracle for RunLearning.
RoundOracle ChainPopulationOracle(const SystemParams& params, int N, int tau, std::uint64_t seed);

// Columns round,bonus,requests,rate,users,threshold.
void WritePopulationCsv(std::ostream& out, const std::vector<PopulationRound>& rounds);

}  // namespace agectl
