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

#include "agectl/trace_sim.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "agectl/analytics.hpp"
#include "agectl/parallel.hpp"
#include "agectl/threshold_search.hpp"

namespace agectl {
namespace {

std::size_t Phase(std::size_t length, int replications, int r) {
  return static_cast<std::size_t>(r) * (length / static_cast<std::size_t>(replications));
}

TraceThreshold ArgmaxCurve(std::vector<double> curve) {
  TraceThreshold out;
  out.reward = curve.front();
  for (std::size_t i = 1; i < curve.size(); ++i) {
    if (curve[i] > out.reward + kRewardTieTolerance) {
      out.reward = curve[i];
      out.s = static_cast<Threshold>(i + 1);
    }
  }
  out.curve = std::move(curve);
  return out;
}

void WriteOptional(std::ostream& out, const std::optional<double>& v) {
  if (v) out << *v;
}

}  // namespace

SimResult SimulatePolicy(const ContactTrace& trace, const SystemParams& params,
                         const ReplayPolicy& policy, const ReplayOptions& options) {
  const std::size_t n = trace.size();
  if (n == 0) throw std::invalid_argument("cannot replay an empty trace");
  if (options.initial_age < 1 || options.initial_age > params.M) {
    throw std::invalid_argument("initial age must lie in [1, M]");
  }
  const Policy* table = std::get_if<Policy>(&policy);
  if (table && table->M() != params.M) throw std::invalid_argument("policy length differs from M");
  if (!table && !trace.has_mask()) {
    throw std::invalid_argument("mask policy needs a trace with a slot mask ('" + trace.shift_id + "')");
  }

  SimResult out;
  out.slots = n;
  if (options.record_rewards) out.slot_rewards.reserve(n);
  const double wifi_fee = std::max(params.P - params.B, 0.0);
  const double cellular_fee = params.P3G ? std::max(*params.P3G - params.B, 0.0) : 0.0;
  Age x = options.initial_age;
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t slot = (options.phase + j) % n;
    const bool contact = trace.slots[slot] != 0;
    const Action a = table ? (*table)(x) : ((*trace.mask)[slot] ? Action::kWifi : Action::kInactive);
    const double r = InstantaneousReward(params, x, a, contact);
    out.total_reward += r;
    if (options.record_rewards) out.slot_rewards.push_back(r);
    if (a != Action::kInactive) out.energy_spent += params.G;
    if (a != Action::kInactive && contact) {
      ++out.wifi_updates;
      out.wifi_fees += wifi_fee;
      out.update_slots.push_back(j + 1);
    } else if (a == Action::kWifiThen3G) {
      ++out.cellular_updates;
      out.cellular_fees += cellular_fee;
      out.update_slots.push_back(j + 1);
    }
    x = NextAge(x, a, contact, params.M);
  }
  out.updates = out.update_slots.size();
  out.fees_paid = out.wifi_fees + out.cellular_fees;
  out.average_reward = out.total_reward / static_cast<double>(n);
  return out;
}

double ReplayedThresholdReward(const ContactTrace& trace, const SystemParams& params,
                               Threshold s, int replications, Age initial_age) {
  if (replications < 1) throw std::invalid_argument("replications must be at least 1");
  const Policy policy = Policy::WifiThreshold(params.M, s);
  double sum = 0.0;
  for (int r = 0; r < replications; ++r) {
    ReplayOptions options;
    options.initial_age = initial_age;
    options.phase = Phase(trace.size(), replications, r);
    sum += SimulatePolicy(trace, params, policy, options).average_reward;
  }
  return sum / replications;
}

TraceThreshold BestTraceThreshold(const ContactTrace& trace, const SystemParams& params,
                                  int replications, Age initial_age) {
  std::vector<double> curve(static_cast<std::size_t>(params.M + 1));
  for (Threshold s = 1; s <= params.M + 1; ++s) {
    curve[s - 1] = ReplayedThresholdReward(trace, params, s, replications, initial_age);
  }
  return ArgmaxCurve(std::move(curve));
}

std::vector<ShiftComparison> CompareShifts(const std::vector<ContactTrace>& traces,
                                           const SystemParams& params, int replications) {
  std::vector<ShiftComparison> rows(traces.size());
  ParallelFor(traces.size(), [&](std::size_t i) {
    const ContactTrace& trace = traces[i];
    ShiftComparison& row = rows[i];
    row.shift_id = trace.shift_id;
    row.p_hat = EstimateP(trace);
    const TraceThreshold best = BestTraceThreshold(trace, params, replications);
    row.s_trace = best.s;
    row.reward_trace = best.reward;
    if (row.p_hat > 0.0 && row.p_hat < 1.0) {
      SystemParams at = params;
      at.p = row.p_hat;
      const ThresholdResult model = OptimalThreshold(at);
      row.s_model = model.s_star;
      row.reward_model_predicted = model.reward;
      row.reward_model_policy_on_trace = best.curve[model.s_star - 1];
    }
  });
  return rows;
}

void WriteShiftComparisonCsv(std::ostream& out, const std::vector<ShiftComparison>& rows) {
  const auto precision = out.precision(10);
  out << "shift_id,p_hat,s_trace,s_model,reward_trace,reward_model_predicted,"
         "reward_model_policy_on_trace\n";
  for (const auto& row : rows) {
    out << row.shift_id << ',' << row.p_hat << ',' << row.s_trace << ',';
    if (row.s_model) out << *row.s_model;
    out << ',' << row.reward_trace << ',';
    WriteOptional(out, row.reward_model_predicted);
    out << ',';
    WriteOptional(out, row.reward_model_policy_on_trace);
    out << '\n';
  }
  out.precision(precision);
}

TraceThreshold FlatStrategyOptimum(const std::vector<ContactTrace>& traces,
                                   const SystemParams& params, int replications) {
  if (traces.empty()) throw std::invalid_argument("flat strategy needs at least one trace");
  std::vector<std::vector<double>> per_trace(traces.size());
  ParallelFor(traces.size(), [&](std::size_t i) {
    per_trace[i] = BestTraceThreshold(traces[i], params, replications).curve;
  });
  std::vector<double> curve(static_cast<std::size_t>(params.M + 1), 0.0);
  for (const auto& c : per_trace) {
    for (std::size_t s = 0; s < curve.size(); ++s) curve[s] += c[s];
  }
  for (double& v : curve) v /= static_cast<double>(traces.size());
  return ArgmaxCurve(std::move(curve));
}

}  // namespace agectl
