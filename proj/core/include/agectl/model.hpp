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

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace agectl {

// Message age, 1-based. Ages live in [1, M] and saturate at M.
using Age = int;

// Activation threshold in [1, M+1]. The value M+1 encodes "never activate".
using Threshold = int;

enum class Action : std::uint8_t {
  kInactive = 0,
  kWifi = 1,
  // Use WiFi if a useful contact exists in the slot, otherwise 3G.
  kWifiThen3G = 2,
};

int ToInt(Action a);
Action ActionFromInt(int a);

// Non-increasing age-to-utility map.
//
// The stored function is always evaluated relative to an offset, so that
// after NormalizeUtility(u, M) the value at age M is zero. The raw offset is
// kept for reporting only; it never changes an optimal policy.
class UtilityFunction {
 public:
  // U(x) = max(M - x, 0).
  struct Linear {
    int M = 0;
  };
  // U(x) = v for x <= k, 0 otherwise.
  struct Step {
    double v = 0.0;
    int k = 0;
  };
  // U(x) = values[x - 1]. Ages beyond the table are an error.
  struct Tabular {
    std::vector<double> values;
  };
  using Form = std::variant<Linear, Step, Tabular>;

  static UtilityFunction MakeLinear(int M);
  static UtilityFunction MakeStep(double v, int k);
  static UtilityFunction MakeTabular(std::vector<double> values);

  // Normalized utility: Raw(x) - offset().
  double operator()(Age x) const { return Raw(x) - offset_; }
  double Raw(Age x) const;
  double offset() const { return offset_; }
  const Form& form() const { return form_; }

  // Short human-readable description, e.g. "step(v=12,k=3)".
  std::string Describe() const;

 private:
  explicit UtilityFunction(Form form) : form_(std::move(form)) {}
  friend UtilityFunction NormalizeUtility(const UtilityFunction& u, int M);

  Form form_;
  double offset_ = 0.0;
};

// Shifts u so that u'(M) = 0. Throws std::invalid_argument if u increases
// anywhere on [1, M].
UtilityFunction NormalizeUtility(const UtilityFunction& u, int M);

// All scalar model parameters.
struct SystemParams {
  double p = 0.5;  // useful WiFi contact probability per slot
  int M = 2;       // maximum age
  double G = 0.0;  // activation (energy) cost per slot
  double P = 0.0;  // WiFi price per update
  // 3G price per update; std::nullopt means 3G is unavailable, which makes
  // Action::kWifiThen3G illegal.
  std::optional<double> P3G;
  double B = 0.0;  // bonus per update
  UtilityFunction utility = UtilityFunction::MakeLinear(2);

  bool has_3g() const { return P3G.has_value(); }
  // Energy cost scaled by 1/(M-1).
  double b() const { return G / static_cast<double>(M - 1); }
  // Upper bound on the bonus: min(P, P3G).
  double MaxBonus() const;
  // Effective per-update cost of the WiFi route, G/p + P - B.
  double WifiCycleCost() const { return G / p + P - B; }

  // Throws std::invalid_argument describing the first violated invariant.
  void Validate() const;
};

// Builds parameters with a linear utility over [1, M] and energy cost
// G = b (M - 1). Convenience for the reference configuration.
SystemParams LinearParams(double p, int M, double b, double P = 0.0,
                          double B = 0.0);

// r(x, a, e) = U(x) - c(a) - max(m(a, e) - B, 0).
double InstantaneousReward(const SystemParams& params, Age x, Action a,
                           bool contact);

// Age at the next slot given the action and whether a useful contact occurred.
Age NextAge(Age x, Action a, bool contact, int M);

// Per-age action map. actions()[x - 1] is the action taken at age x.
class Policy {
 public:
  Policy() = default;
  explicit Policy(std::vector<Action> actions);

  // a(x) = 0 for x < s, 1 for s <= x < s3g, 2 for x >= s3g.
  static Policy FromThresholds(int M, Threshold s, Threshold s3g);
  static Policy WifiThreshold(int M, Threshold s) {
    return FromThresholds(M, s, M + 1);
  }

  Action operator()(Age x) const;
  int M() const { return static_cast<int>(actions_.size()); }
  std::span<const Action> actions() const { return actions_; }
  bool Uses(Action a) const;

  // Digits, e.g. "0011122".
  std::string ToString() const;

  friend bool operator==(const Policy&, const Policy&) = default;

 private:
  std::vector<Action> actions_;
};

}  // namespace agectl
