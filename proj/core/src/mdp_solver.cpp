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

#include "agectl/mdp_solver.hpp"

#include <algorithm>
#include <stdexcept>

namespace agectl {

ActionValues BellmanValues(Age x, std::span<const double> V, const SystemParams& params) {
  const int M = params.M;
  if (static_cast<int>(V.size()) != M) throw std::invalid_argument("value vector must have M entries");
  if (x < 1 || x > M) throw std::out_of_range("age outside [1, M]");
  const double p = params.p;
  const double u = params.utility(x);
  const double v1 = V[0];
  const double next = V[static_cast<std::size_t>(std::min(M, x + 1) - 1)];

  ActionValues out;
  out.inactive = u + next;
  out.wifi = u - params.G + p * v1 + (1.0 - p) * next - p * params.P + p * params.B;
  if (params.P3G) {
    out.wifi_then_3g = u - params.G + v1 - p * params.P - (1.0 - p) * *params.P3G + params.B;
  }
  return out;
}

namespace {

double BestValue(const ActionValues& f) {
  double best = std::max(f.inactive, f.wifi);
  if (f.wifi_then_3g) best = std::max(best, *f.wifi_then_3g);
  return best;
}

}  // namespace

SolveReport SolveUserProblem(const SystemParams& params, const SolverOptions& options) {
  params.Validate();
  if (!(options.tol > 0.0)) throw std::invalid_argument("tol must be positive");
  if (options.max_iter < 1) throw std::invalid_argument("max_iter must be positive");
  if (!(options.step > 0.0 && options.step <= 1.0)) throw std::invalid_argument("step must lie in (0, 1]");
  const int M = params.M;
  if (options.reference_age < 1 || options.reference_age > M) {
    throw std::invalid_argument("reference age outside [1, M]");
  }
  const auto ref = static_cast<std::size_t>(options.reference_age - 1);

  std::vector<double> V(static_cast<std::size_t>(M), 0.0);
  std::vector<double> diff(V.size());
  SolveReport report;
  report.status = SolveStatus::kMaxIterations;
  double gain = 0.0;
  double span = 0.0;

  for (long it = 1; it <= options.max_iter; ++it) {
    double lo = 0.0;
    double hi = 0.0;
    for (Age x = 1; x <= M; ++x) {
      const double d = BestValue(BellmanValues(x, V, params)) - V[x - 1];
      diff[x - 1] = d;
      lo = x == 1 ? d : std::min(lo, d);
      hi = x == 1 ? d : std::max(hi, d);
    }
    span = hi - lo;
    gain = 0.5 * (hi + lo);
    report.iterations = it;
    if (span <= options.tol) {
      report.status = SolveStatus::kConverged;
      break;
    }
    const double shift = options.step * diff[ref];
    for (std::size_t i = 0; i < V.size(); ++i) V[i] += options.step * diff[i] - shift;
    // Re-pin exactly; the subtraction above can leave rounding residue.
    const double pin = V[ref];
    for (double& v : V) v -= pin;
  }

  report.residual = 0.5 * span;
  report.value = ValueFunction{std::move(V), gain};
  report.policy = GreedyPolicy(report.value, params, options.tie_tolerance);
  return report;
}

Policy GreedyPolicy(const ValueFunction& value, const SystemParams& params, double tie_tolerance) {
  const int M = params.M;
  std::vector<Action> actions(static_cast<std::size_t>(M));
  for (Age x = 1; x <= M; ++x) {
    const ActionValues f = BellmanValues(x, value.V, params);
    Action best = Action::kInactive;
    double best_value = f.inactive;
    if (f.wifi > best_value + tie_tolerance) {
      best = Action::kWifi;
      best_value = f.wifi;
    }
    if (f.wifi_then_3g && *f.wifi_then_3g > best_value + tie_tolerance) {
      best = Action::kWifiThen3G;
    }
    actions[x - 1] = best;
  }
  return Policy(std::move(actions));
}

std::variant<ThresholdPair, StructureViolation> VerifyThresholdStructure(const Policy& policy) {
  const int M = policy.M();
  for (Age x = 1; x < M; ++x) {
    if (ToInt(policy(x)) > ToInt(policy(x + 1))) {
      return StructureViolation{x, policy(x), policy(x + 1)};
    }
  }
  ThresholdPair out{M + 1, M + 1};
  for (Age x = M; x >= 1; --x) {
    if (policy(x) != Action::kInactive) out.s = x;
    if (policy(x) == Action::kWifiThen3G) out.s_3g = x;
  }
  return out;
}

}  // namespace agectl
