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

#include "agectl/analytics.hpp"

#include <cmath>
#include <stdexcept>

namespace agectl {
namespace {

void CheckProbability(double p) {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("p must lie in (0, 1)");
}

}  // namespace

double UpdateRate(Threshold s, double p) {
  return 1.0 / (static_cast<double>(s) + (1.0 - p) / p);
}

SteadyState SteadyStateThreshold(Threshold s, double p, int M) {
  CheckProbability(p);
  if (M < 2) throw std::invalid_argument("M must be at least 2");
  if (s < 1 || s > M) {
    throw std::invalid_argument("steady state needs 1 <= s <= M; s = M+1 is absorbing");
  }
  const double q = 1.0 - p;
  const double pi1 = UpdateRate(s, p);
  SteadyState out{std::vector<double>(static_cast<std::size_t>(M))};
  for (Age x = 1; x <= M; ++x) {
    double v;
    if (x <= s) {
      v = pi1;
    } else if (x < M) {
      v = pi1 * std::pow(q, x - s);
    } else {
      v = pi1 * std::pow(q, M - s) / p;
    }
    out.pi[x - 1] = v;
  }
  // With s = M the saturating age is also the threshold age.
  if (s == M) out.pi[M - 1] = pi1 / p;
  return out;
}

double ExpectedRewardThreshold(const SystemParams& params, Threshold s) {
  const int M = params.M;
  if (s < 1 || s > M + 1) throw std::invalid_argument("threshold outside [1, M+1]");
  if (s == M + 1) return 0.0;
  const double p = params.p;
  const double q = 1.0 - p;
  double inactive = 0.0;
  for (Age x = 1; x <= s - 1; ++x) inactive += params.utility(x);
  double active = 0.0;
  double weight = 1.0;
  for (int i = 0; i <= M - 1 - s; ++i) {
    active += params.utility(i + s) * weight;
    weight *= q;
  }
  return UpdateRate(s, p) * (inactive + active - params.G / p - params.P + params.B);
}

double ExpectedAge(Threshold s, double p, int M) {
  if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in (0, 1]");
  if (s < 1 || s > M) throw std::invalid_argument("expected age needs 1 <= s <= M");
  const double sd = static_cast<double>(s);
  const double q = 1.0 - p;
  const double num = p * p * sd * sd - p * p * sd - 2.0 * std::pow(q, M - s) * q + 2.0 * sd * p + 2.0 - 2.0 * p;
  return num / (2.0 * p * (sd * p + 1.0 - p));
}

double ExpectedAgeOrSaturated(Threshold s, double p, int M) {
  return s == M + 1 ? static_cast<double>(M) : ExpectedAge(s, p, M);
}

ChainSummary SummarizeThreshold(const SystemParams& params, Threshold s) {
  if (s == params.M + 1) return ChainSummary{0.0, static_cast<double>(params.M), 0.0};
  return ChainSummary{ExpectedRewardThreshold(params, s), ExpectedAge(s, params.p, params.M),
                      UpdateRate(s, params.p)};
}

double ExpectedRewardTwoThreshold(const SystemParams& params, Threshold s_wifi, Threshold s_3g) {
  if (!params.P3G) throw std::invalid_argument("two-threshold reward needs a finite 3G price");
  const int M = params.M;
  if (s_wifi < 1 || s_wifi > s_3g || s_3g > M) {
    throw std::invalid_argument("two-threshold reward needs 1 <= s_W <= s_3G <= M");
  }
  const double p = params.p;
  const double q = 1.0 - p;
  const int span = s_3g - s_wifi + 1;
  const double tail = std::pow(q, span);
  const double pi1 = 1.0 / (static_cast<double>(s_wifi - 1) + (1.0 - tail) / p);

  double inactive = 0.0;
  for (Age i = 1; i <= s_wifi - 1; ++i) inactive += params.utility(i);
  double active = 0.0;
  double weight = 1.0;
  for (Age i = s_wifi; i <= s_3g; ++i) {
    active += weight * params.utility(i);
    weight *= q;
  }
  const double wifi_cost = params.G / p + params.P;
  return pi1 * (inactive + active - (wifi_cost - params.B) - (*params.P3G - wifi_cost) * tail);
}

double ExpectedReward3GOnly(const SystemParams& params, Threshold s_3g) {
  if (!params.P3G) throw std::invalid_argument("3G-only reward needs a finite 3G price");
  const int M = params.M;
  if (s_3g < 1 || s_3g > M + 1) throw std::invalid_argument("threshold outside [1, M+1]");
  if (s_3g == M + 1) return 0.0;
  double sum = 0.0;
  for (Age i = 1; i <= s_3g; ++i) sum += params.utility(i);
  const double p = params.p;
  return (sum - params.G - p * params.P - (1.0 - p) * *params.P3G + params.B) / s_3g;
}

double ExpectedAge3GOnly(Threshold s_3g, int M) {
  if (s_3g < 1 || s_3g > M + 1) throw std::invalid_argument("threshold outside [1, M+1]");
  if (s_3g == M + 1) return static_cast<double>(M);
  return (s_3g + 1) / 2.0;
}

}  // namespace agectl
