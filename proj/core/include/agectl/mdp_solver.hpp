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

// Average-reward solver for the user problem. Works on the optimality
// equations directly and does not use any closed-form expression.

#pragma once

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "agectl/model.hpp"

namespace agectl {

// Relative rewards V over ages 1..M (V[x - 1] = V(x)) and the gain.
struct ValueFunction {
  std::vector<double> V;
  double gain = 0.0;

  double operator()(Age x) const { return V[static_cast<std::size_t>(x - 1)]; }
  int M() const { return static_cast<int>(V.size()); }
};

// One-step lookahead values F(a, x) for the three actions. wifi_then_3g is
// empty when 3G is unavailable.
struct ActionValues {
  double inactive = 0.0;
  double wifi = 0.0;
  std::optional<double> wifi_then_3g;
};

ActionValues BellmanValues(Age x, std::span<const double> V, const SystemParams& params);

struct SolverOptions {
  double tol = 1e-10;             // span-seminorm stopping tolerance
  long max_iter = 1'000'000;
  Age reference_age = 1;          // V(reference_age) is pinned to 0
  // Each sweep moves V by this fraction of the Bellman update. Values below 1
  // remove the periodicity of the deterministic age cycles.
  double step = 0.5;
  double tie_tolerance = 1e-9;    // greedy tie-break window
};

enum class SolveStatus { kConverged, kMaxIterations };

struct SolveReport {
  ValueFunction value;
  Policy policy;
  long iterations = 0;
  double residual = 0.0;  // sup-norm Bellman error |max_a F(a,x) - g - V(x)|
  SolveStatus status = SolveStatus::kConverged;

  bool converged() const { return status == SolveStatus::kConverged; }
};

// Relative value iteration. Never throws on non-convergence: the report
// carries status kMaxIterations and the last residual instead.
SolveReport SolveUserProblem(const SystemParams& params, const SolverOptions& options = {});

// Per-age argmax of the available F values. A higher-numbered action wins
// only if it beats the current best by more than tie_tolerance.
Policy GreedyPolicy(const ValueFunction& value, const SystemParams& params,
                    double tie_tolerance = 1e-9);

struct ThresholdPair {
  Threshold s = 0;
  Threshold s_3g = 0;
  friend bool operator==(const ThresholdPair&, const ThresholdPair&) = default;
};

// First inversion in the action sequence: a(x) > a(x + 1).
struct StructureViolation {
  Age x = 0;
  Action at_x = Action::kInactive;
  Action at_next = Action::kInactive;
};

// Succeeds iff the actions are non-decreasing in age. Missing switches are
// reported as M + 1.
std::variant<ThresholdPair, StructureViolation> VerifyThresholdStructure(const Policy& policy);

}  // namespace agectl
