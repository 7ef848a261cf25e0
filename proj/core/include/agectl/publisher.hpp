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

// Publisher bonus selection under complete information. Users best-respond
// to the bonus with the smallest optimal WiFi threshold s*(B).

#pragma once

#include <optional>
#include <variant>

#include "agectl/model.hpp"

namespace agectl {

struct PublisherInstance {
  SystemParams params;  // params.B is ignored; the bonus is the decision
  int N = 1;            // number of users
  double T = 1.0;       // cap on expected messages per slot

  void Validate() const;
};

struct BonusInterval {
  double lo = 0.0;
  double hi = 0.0;

  bool Contains(double b) const { return b >= lo && b <= hi; }
};

struct BonusSolution {
  Threshold target = 0;    // smallest s meeting the rate cap
  // Smallest s >= target induced on a bonus interval wider than
  // kBonusResolution, or at B = 0 or B = min(P, P3G).
  Threshold attained = 0;
  BonusInterval bonus;     // every bonus in here induces `attained`
  double achieved_rate = 0.0;
  double achieved_age = 0.0;
};

struct Infeasible {
  Threshold target = 0;
  Threshold max_threshold = 0;  // s*(0), the largest inducible threshold
};

using PublisherOutcome = std::variant<BonusSolution, Infeasible>;

// Bisection stops once the bracket is at most this wide.
inline constexpr double kBonusResolution = 1e-9;

// s*(B): the users' (smallest) optimal threshold at bonus B.
Threshold InducedThreshold(const SystemParams& params, double bonus);

// N / (s + (1-p)/p) for s in [1, M]; 0 for s = M+1.
double MessageRateAtThreshold(Threshold s, double p, int M, int N);

// Rate generated by N users best-responding at params.B.
double MessageRate(const SystemParams& params, int N);

// Smallest s in [1, M+1] with N / (s + (1-p)/p) <= T.
Threshold TargetThreshold(int N, double T, double p, int M);

// Maximal bonus interval within [0, MaxBonus] inducing threshold s, or empty
// when no bonus induces it.
std::optional<BonusInterval> BonusRangeForThreshold(const PublisherInstance& instance, Threshold s);

// Minimizes expected age subject to the rate cap.
PublisherOutcome OptimalBonus(const PublisherInstance& instance);

}  // namespace agectl
