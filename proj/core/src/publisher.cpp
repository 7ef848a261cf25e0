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

#include "agectl/publisher.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "agectl/analytics.hpp"
#include "agectl/threshold_search.hpp"

namespace agectl {
namespace {

constexpr int kMaxBisectionSteps = 200;

// Largest B in [lo, hi] with pred(B) true, given pred(lo) && !pred(hi) and a
// predicate that is monotone (true then false).
template <class Pred>
double LastTrue(double lo, double hi, Pred pred) {
  for (int i = 0; i < kMaxBisectionSteps && hi - lo > kBonusResolution; ++i) {
    const double mid = lo + 0.5 * (hi - lo);
    (pred(mid) ? lo : hi) = mid;
  }
  return lo;
}

// Smallest B in [lo, hi] with pred(B) true, given !pred(lo) && pred(hi).
template <class Pred>
double FirstTrue(double lo, double hi, Pred pred) {
  for (int i = 0; i < kMaxBisectionSteps && hi - lo > kBonusResolution; ++i) {
    const double mid = lo + 0.5 * (hi - lo);
    (pred(mid) ? hi : lo) = mid;
  }
  return hi;
}

}  // namespace

void PublisherInstance::Validate() const {
  params.Validate();
  if (N < 1) throw std::invalid_argument("N must be at least 1");
  if (!(T > 0.0) || !std::isfinite(T)) throw std::invalid_argument("T must be positive and finite");
}

Threshold InducedThreshold(const SystemParams& params, double bonus) {
  SystemParams at = params;
  at.B = bonus;
  return OptimalThreshold(at).s_star;
}

double MessageRateAtThreshold(Threshold s, double p, int M, int N) {
  if (s == M + 1) return 0.0;
  return static_cast<double>(N) * UpdateRate(s, p);
}

double MessageRate(const SystemParams& params, int N) {
  return MessageRateAtThreshold(OptimalThreshold(params).s_star, params.p, params.M, N);
}

Threshold TargetThreshold(int N, double T, double p, int M) {
  const double offset = (1.0 - p) / p;
  auto fits = [&](Threshold s) { return MessageRateAtThreshold(s, p, M, N) <= T; };
  const double raw = std::ceil(static_cast<double>(N) / T - offset);
  Threshold s = static_cast<Threshold>(std::clamp(raw, 1.0, static_cast<double>(M + 1)));
  // ceil() on a rounded quotient can land one off; settle on the exact boundary.
  while (s > 1 && fits(s - 1)) --s;
  while (s <= M && !fits(s)) ++s;
  return s;
}

std::optional<BonusInterval> BonusRangeForThreshold(const PublisherInstance& instance, Threshold s) {
  const SystemParams& params = instance.params;
  if (s < 1 || s > params.M + 1) throw std::invalid_argument("threshold outside [1, M+1]");
  const double cap = params.MaxBonus();
  const Threshold at_zero = InducedThreshold(params, 0.0);
  const Threshold at_cap = InducedThreshold(params, cap);
  if (s < at_cap || s > at_zero) return std::nullopt;

  auto at = [&](double b) { return InducedThreshold(params, b); };
  const double lo = at_zero <= s ? 0.0 : FirstTrue(0.0, cap, [&](double b) { return at(b) <= s; });
  const double hi = at_cap >= s ? cap : LastTrue(0.0, cap, [&](double b) { return at(b) >= s; });
  if (lo > hi || at(lo) != s || at(hi) != s) return std::nullopt;
  return BonusInterval{lo, hi};
}

PublisherOutcome OptimalBonus(const PublisherInstance& instance) {
  instance.Validate();
  const SystemParams& params = instance.params;
  const Threshold target = TargetThreshold(instance.N, instance.T, params.p, params.M);
  const double cap = params.MaxBonus();
  const Threshold at_zero = InducedThreshold(params, 0.0);
  if (at_zero < target) return Infeasible{target, at_zero};

  // Largest bonus that still keeps users at or above the target threshold.
  const double edge = InducedThreshold(params, cap) >= target
                          ? cap
                          : LastTrue(0.0, cap, [&](double b) { return InducedThreshold(params, b) >= target; });
  Threshold attained = InducedThreshold(params, edge);
  auto interval = BonusRangeForThreshold(instance, attained);
  if (!interval) throw std::logic_error("attained threshold has no bonus interval");
  // An interior interval below the bisection resolution only exists inside
  // the tie window of a multi-way tie; exact tie-breaking never selects it.
  while (interval->hi - interval->lo <= kBonusResolution && interval->lo > 0.0 && interval->hi < cap) {
    const Threshold skipped = attained;
    const double below = LastTrue(0.0, interval->lo, [&](double b) { return InducedThreshold(params, b) > skipped; });
    attained = InducedThreshold(params, below);
    interval = BonusRangeForThreshold(instance, attained);
    if (!interval) throw std::logic_error("attained threshold has no bonus interval");
  }

  BonusSolution out;
  out.target = target;
  out.attained = attained;
  out.bonus = *interval;
  out.achieved_rate = MessageRateAtThreshold(attained, params.p, params.M, instance.N);
  out.achieved_age = ExpectedAgeOrSaturated(attained, params.p, params.M);
  return out;
}

}  // namespace agectl
