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

// Synthetic bus-shift corpus. Each shift is a sequence of short runs; the
// last slot of every run is a stop at a privileged location (mask bit set)
// where contact is very likely. Per-shift contact probabilities follow a
// piecewise-linear quantile function with median 0.53.

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "agectl/trace.hpp"

namespace agectl {

struct CorpusOptions {
  int shifts = 150;
  int runs_per_shift = 8;
  int min_run_slots = 8;
  int max_run_slots = 16;
  // Run length min + k is drawn with weight decay^k; 1 gives a uniform draw.
  double run_length_decay = 0.6;
  double stop_contact_probability = 0.95;
  std::uint64_t seed = 1;
  // (quantile level, p) knots, strictly increasing in both coordinates,
  // spanning levels 0 to 1.
  std::vector<std::pair<double, double>> p_quantiles = {
      {0.0, 0.10}, {0.15, 0.30}, {0.50, 0.53}, {0.92, 0.70}, {1.0, 0.85}};

  void Validate() const;
};

// Piecewise-linear interpolation through the knots.
double QuantileP(const CorpusOptions& options, double level);

// Median of the target p distribution.
inline double TargetMedianP(const CorpusOptions& options) { return QuantileP(options, 0.5); }

// Shift i has id "shift<i>" (zero-padded) and a mask.
std::vector<ContactTrace> GenerateCorpus(const CorpusOptions& options);

// i.i.d. Bernoulli(p) contacts, no mask.
ContactTrace GenerateIidTrace(double p, std::size_t slots, std::uint64_t seed,
                              std::string shift_id = "iid");

}  // namespace agectl
