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

#include "agectl/lambert_w.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace agectl {
namespace {

constexpr double kInvE = 0.36787944117144232160;
constexpr double kE = 2.71828182845904523536;

double InitialGuess(double x) {
  if (x < -0.32) {
    // Series about the branch point.
    const double r = std::sqrt(std::max(0.0, 2.0 * (kE * x + 1.0)));
    return -1.0 + r - r * r / 3.0 + 11.0 / 72.0 * r * r * r;
  }
  if (x < 3.0) {
    const double l = std::log1p(x);
    return l * (1.0 - std::log1p(l) / (2.0 + l));
  }
  const double l1 = std::log(x);
  const double l2 = std::log(l1);
  return l1 - l2 + l2 / l1;
}

}  // namespace

double LambertW0(double x) {
  if (std::isnan(x) || x < -kInvE) throw std::domain_error("LambertW0: argument below -1/e");
  if (x == 0.0) return 0.0;
  if (x == -kInvE) return -1.0;
  if (std::isinf(x)) return x;

  double w = InitialGuess(x);
  for (int i = 0; i < 64; ++i) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    const double wp1 = w + 1.0;
    if (std::abs(wp1) < 1e-300) break;
    // Halley step.
    const double denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
    if (denom == 0.0) break;
    const double next = w - f / denom;
    const double delta = std::abs(next - w);
    w = next;
    if (delta <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(w))) break;
  }
  return w;
}

double LambertW0FromLog(double log_x) {
  if (std::isnan(log_x)) throw std::domain_error("LambertW0FromLog: NaN argument");
  if (log_x < 700.0) return LambertW0(std::exp(log_x));
  // Newton on w + ln w = log_x; w > 600 here so ln w is well behaved.
  double w = log_x - std::log(log_x);
  for (int i = 0; i < 64; ++i) {
    const double f = w + std::log(w) - log_x;
    const double next = w - f / (1.0 + 1.0 / w);
    const double delta = std::abs(next - w);
    w = next;
    if (delta <= 4.0 * std::numeric_limits<double>::epsilon() * w) break;
  }
  return w;
}

}  // namespace agectl
