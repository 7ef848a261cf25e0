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

#include "agectl/threshold_search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

#include "agectl/analytics.hpp"
#include "agectl/lambert_w.hpp"

namespace agectl {
namespace {

ThresholdResult FromCurve(const SystemParams& params, const std::vector<double>& curve) {
  ThresholdResult out;
  const double best = *std::max_element(curve.begin(), curve.end());
  for (std::size_t i = 0; i < curve.size(); ++i) {
    if (curve[i] >= best - kRewardTieTolerance) out.all_optima.push_back(static_cast<Threshold>(i + 1));
  }
  out.s_star = out.all_optima.front();
  out.reward = curve[static_cast<std::size_t>(out.s_star - 1)];
  out.always_active = AlwaysActive(params);
  out.always_inactive = AlwaysInactive(params);
  return out;
}

}  // namespace

std::vector<double> ThresholdRewardCurve(const SystemParams& params) {
  std::vector<double> curve(static_cast<std::size_t>(params.M + 1));
  for (Threshold s = 1; s <= params.M + 1; ++s) curve[s - 1] = ExpectedRewardThreshold(params, s);
  return curve;
}

ThresholdResult OptimalThreshold(const SystemParams& params) {
  return FromCurve(params, ThresholdRewardCurve(params));
}

Threshold FirstCrossingThreshold(const SystemParams& params) {
  const auto curve = ThresholdRewardCurve(params);
  for (Threshold s = 1; s <= params.M; ++s) {
    if (curve[s - 1] >= curve[s]) return s;
  }
  return params.M + 1;
}

bool AlwaysActive(const SystemParams& params) {
  const double p = params.p;
  const double q = 1.0 - p;
  double discounted = 0.0;
  double weight = 1.0;
  for (Age x = 1; x <= params.M - 1; ++x) {
    discounted += params.utility(x) * weight;
    weight *= q;
  }
  return (params.utility(1) - p * discounted) / q >= params.WifiCycleCost();
}

bool AlwaysInactive(const SystemParams& params) {
  double total = 0.0;
  for (int j = 1; j <= params.M - 1; ++j) total += params.utility(params.M - j);
  return total <= params.WifiCycleCost();
}

std::optional<double> StepCriticalPoint(const SystemParams& params) {
  const auto* step = std::get_if<UtilityFunction::Step>(&params.utility.form());
  if (step == nullptr) return std::nullopt;
  // Normalization flattens a step that extends to age M.
  if (step->k < 1 || step->k >= params.M || !(step->v > 0.0)) return std::nullopt;

  const double p = params.p;
  const double v = step->v;
  const double k = static_cast<double>(step->k);
  const double log_q = std::log1p(-p);
  const double cost = params.G + p * params.P - p * params.B;
  if (cost < 0.0) return std::nullopt;

  double w = 0.0;
  if (cost > 0.0) {
    const double log_arg = std::log(cost) - (log_q * (1.0 + k * p) + p) / p - std::log(v);
    w = LambertW0FromLog(log_arg);
  }
  const double phi = -(p + w * p + log_q * (1.0 - p)) / (log_q * p);
  if (!std::isfinite(phi)) return std::nullopt;
  return phi;
}

ThresholdResult StepUtilityThreshold(const SystemParams& params) {
  const auto* step = std::get_if<UtilityFunction::Step>(&params.utility.form());
  if (step == nullptr) throw std::invalid_argument("StepUtilityThreshold needs a step utility");
  const auto phi = StepCriticalPoint(params);
  if (!phi) {
    ThresholdResult out = OptimalThreshold(params);
    out.used_fallback = true;
    return out;
  }

  const int M = params.M;
  auto clip = [M](double s) {
    return static_cast<Threshold>(std::clamp(s, 1.0, static_cast<double>(M + 1)));
  };
  const std::set<Threshold> candidates = {
      clip(1.0), clip(step->k - 1.0), clip(std::floor(*phi)), clip(std::ceil(*phi)),
      clip(static_cast<double>(M)), clip(M + 1.0)};

  std::vector<std::pair<Threshold, double>> scored;
  double best = -std::numeric_limits<double>::infinity();
  for (Threshold s : candidates) {
    const double r = ExpectedRewardThreshold(params, s);
    scored.emplace_back(s, r);
    best = std::max(best, r);
  }
  ThresholdResult out;
  for (const auto& [s, r] : scored) {
    if (r >= best - kRewardTieTolerance) out.all_optima.push_back(s);
  }
  out.s_star = out.all_optima.front();
  out.reward = ExpectedRewardThreshold(params, out.s_star);
  out.always_active = AlwaysActive(params);
  out.always_inactive = AlwaysInactive(params);
  return out;
}

bool MultiplicityConditionHolds(const SystemParams& params, double tolerance) {
  const double cost = params.WifiCycleCost();
  const int M = params.M;
  double head = 0.0;  // sum_{x=1}^{m-1} U(x)
  for (int m = 1; m < M - 1; ++m) {
    if (m > 1) head += params.utility(m - 1);
    if (std::abs(head - cost) > tolerance) continue;
    bool zero_tail = true;
    for (Age x = m + 1; x <= M && zero_tail; ++x) zero_tail = std::abs(params.utility(x)) <= tolerance;
    if (zero_tail) return true;
  }
  return false;
}

OptimaEnumeration EnumerateOptimalThresholds(const SystemParams& params) {
  OptimaEnumeration out;
  out.optima = OptimalThreshold(params).all_optima;
  out.degenerate = out.optima.size() >= 3;
  out.multiplicity_condition = MultiplicityConditionHolds(params);
  return out;
}

TwoThresholdResult OptimalTwoThresholds(const SystemParams& params) {
  if (!params.P3G) throw std::invalid_argument("two-threshold search needs a finite 3G price");
  const int M = params.M;
  const double p = params.p;
  const double q = 1.0 - p;
  const double p3g = *params.P3G;
  const double wifi_cost = params.G / p + params.P;

  TwoThresholdResult best{M + 1, M + 1, 0.0};
  auto consider = [&best](Threshold sw, Threshold s3g, double r) {
    if (r > best.reward + kRewardTieTolerance) best = TwoThresholdResult{sw, s3g, r};
  };

  if (p3g <= wifi_cost) {
    // No WiFi band: inactive below s_3G, action 2 from s_3G on.
    best.reward = ExpectedReward3GOnly(params, 1);
    best.s_wifi = best.s_3g = 1;
    for (Threshold s = 2; s <= M + 1; ++s) consider(s, s, ExpectedReward3GOnly(params, s));
    return best;
  }

  best.reward = ExpectedRewardThreshold(params, 1);
  best.s_wifi = 1;
  for (Threshold s = 2; s <= M + 1; ++s) consider(s, M + 1, ExpectedRewardThreshold(params, s));

  std::vector<double> prefix(static_cast<std::size_t>(M + 1), 0.0);
  for (Age i = 1; i <= M; ++i) prefix[i] = prefix[i - 1] + params.utility(i);
  for (Threshold sw = 1; sw <= M; ++sw) {
    double active = 0.0;
    double weight = 1.0;  // q^{s3g - sw}
    for (Threshold s3g = sw; s3g <= M; ++s3g) {
      active += weight * params.utility(s3g);
      weight *= q;
      const double tail = weight;  // q^{s3g - sw + 1}
      const double pi1 = 1.0 / (static_cast<double>(sw - 1) + (1.0 - tail) / p);
      const double r =
          pi1 * (prefix[sw - 1] + active - (wifi_cost - params.B) - (p3g - wifi_cost) * tail);
      consider(sw, s3g, r);
    }
  }
  return best;
}

std::string ToString(SweepParameter parameter) {
  switch (parameter) {
    case SweepParameter::kG:
      return "G";
    case SweepParameter::kP:
      return "P";
    case SweepParameter::kB:
      return "B";
  }
  return "?";
}

SweepParameter SweepParameterFromString(const std::string& name) {
  if (name == "G") return SweepParameter::kG;
  if (name == "P") return SweepParameter::kP;
  if (name == "B") return SweepParameter::kB;
  throw std::invalid_argument("unknown sweep parameter '" + name + "' (expected G, P or B)");
}

MonotonicityReport MonotonicityCheck(const SystemParams& params, SweepParameter parameter,
                                     std::span<const double> grid) {
  if (!std::is_sorted(grid.begin(), grid.end())) throw std::invalid_argument("sweep grid must be ascending");
  MonotonicityReport report;
  report.parameter = parameter;
  report.grid.assign(grid.begin(), grid.end());
  for (double value : grid) {
    SystemParams swept = params;
    switch (parameter) {
      case SweepParameter::kG:
        swept.G = value;
        break;
      case SweepParameter::kP:
        swept.P = value;
        break;
      case SweepParameter::kB:
        swept.B = value;
        break;
    }
    swept.Validate();
    report.thresholds.push_back(OptimalThreshold(swept).s_star);
  }
  for (std::size_t i = 0; i + 1 < report.thresholds.size(); ++i) {
    const Threshold a = report.thresholds[i];
    const Threshold b = report.thresholds[i + 1];
    const bool bad = parameter == SweepParameter::kB ? b > a : b < a;
    if (bad) {
      report.first_violation = i;
      break;
    }
  }
  return report;
}

}  // namespace agectl
