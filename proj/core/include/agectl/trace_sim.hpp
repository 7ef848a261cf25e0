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

// Trace-driven replay of age-control policies.

#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <variant>
#include <vector>

#include "agectl/model.hpp"
#include "agectl/trace.hpp"

namespace agectl {

// Location-aware policy: WiFi iff the slot's mask bit is set.
struct MaskPolicy {};

using ReplayPolicy = std::variant<Policy, MaskPolicy>;

struct ReplayOptions {
  Age initial_age = 1;
  // Replay starts at this slot and wraps around, covering every slot once.
  std::size_t phase = 0;
  bool record_rewards = false;
};

struct SimResult {
  double total_reward = 0.0;
  std::size_t slots = 0;
  double average_reward = 0.0;
  std::size_t updates = 0;
  std::vector<std::size_t> update_slots;  // 1-based, relative to the replay start
  double energy_spent = 0.0;
  double fees_paid = 0.0;
  double wifi_fees = 0.0;
  double cellular_fees = 0.0;
  std::size_t wifi_updates = 0;
  std::size_t cellular_updates = 0;
  std::vector<double> slot_rewards;  // only with record_rewards
};

// Throws std::invalid_argument for a mask policy on a maskless trace, a
// policy of the wrong length, or an empty trace.
SimResult SimulatePolicy(const ContactTrace& trace, const SystemParams& params,
                         const ReplayPolicy& policy, const ReplayOptions& options = {});

// Mean average reward of WiFi threshold s over rotated-phase replays
// (phase r * floor(len / replications)).
double ReplayedThresholdReward(const ContactTrace& trace, const SystemParams& params,
                               Threshold s, int replications, Age initial_age = 1);

struct TraceThreshold {
  Threshold s = 1;
  double reward = 0.0;
  std::vector<double> curve;  // index s - 1
};

// Best WiFi threshold on the trace; ties go to the smaller s.
TraceThreshold BestTraceThreshold(const ContactTrace& trace, const SystemParams& params,
                                  int replications, Age initial_age = 1);

struct ShiftComparison {
  std::string shift_id;
  double p_hat = 0.0;
  Threshold s_trace = 1;
  std::optional<Threshold> s_model;  // absent when p_hat is 0 or 1
  double reward_trace = 0.0;
  std::optional<double> reward_model_predicted;
  std::optional<double> reward_model_policy_on_trace;
};

// Per-shift trace optimum versus the model optimum at p = p_hat. Shifts are
// processed in parallel; output follows input order.
std::vector<ShiftComparison> CompareShifts(const std::vector<ContactTrace>& traces,
                                           const SystemParams& params, int replications);

void WriteShiftComparisonCsv(std::ostream& out, const std::vector<ShiftComparison>& rows);

// One threshold for every shift, maximizing the mean of the per-shift
// replayed average rewards. Ties go to the smaller s.
TraceThreshold FlatStrategyOptimum(const std::vector<ContactTrace>& traces,
                                   const SystemParams& params, int replications);

}  // namespace agectl
