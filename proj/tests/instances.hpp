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

// Seeded random instance generators shared by the property tests.

#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "agectl/model.hpp"

namespace agectl::testing {

class InstanceGenerator {
 public:
  explicit InstanceGenerator(std::uint64_t seed) : rng_(seed) {}

  double Real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int Int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  std::mt19937_64& engine() { return rng_; }

  // Non-increasing utility with U(M) = 0, picked among the three forms.
  UtilityFunction Utility(int M) {
    switch (Int(0, 2)) {
      case 0:
        return UtilityFunction::MakeLinear(M);
      case 1:
        return UtilityFunction::MakeStep(Real(0.5, 20), Int(1, M - 1));
      default: {
        std::vector<double> v(static_cast<std::size_t>(M));
        double level = 0.0;
        for (int x = M; x >= 1; --x) {
          v[x - 1] = level;
          level += Real(0.0, 3.0);
        }
        return NormalizeUtility(UtilityFunction::MakeTabular(v), M);
      }
    }
  }

  // WiFi-only instance. Costs are scaled to the utility so that every
  // threshold regime (always active, interior, always inactive) occurs.
  SystemParams WifiOnly(int max_M = 30) {
    SystemParams params;
    params.M = Int(2, max_M);
    params.p = Real(0.05, 0.95);
    params.utility = Utility(params.M);
    double total = 0.0;
    for (int x = 1; x < params.M; ++x) total += params.utility(x);
    const double scale = std::max(total, 1.0);
    params.G = Real(0.0, 0.6) * scale * params.p;
    params.P = Real(0.0, 0.4) * scale;
    params.B = Real(0.0, 1.0) * params.P;
    return params;
  }

  // Instance with a finite 3G price, either above or below G/p + P.
  SystemParams With3G(int max_M = 20) {
    SystemParams params = WifiOnly(max_M);
    const double wifi = params.G / params.p + params.P;
    params.P3G = Int(0, 1) ? wifi * Real(1.05, 3.0) : wifi * Real(0.2, 1.0);
    params.B = Real(0.0, 1.0) * std::min(params.P, *params.P3G);
    return params;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace agectl::testing
