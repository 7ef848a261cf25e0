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

#include "agectl/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "agectl/random.hpp"

namespace agectl {
namespace {

std::size_t DrawIndex(const std::vector<double>& weights, Rng& rng) {
  double total = 0.0;
  for (double w : weights) total += w;
  double u = rng.Uniform() * total;
  for (std::size_t i = 0; i + 1 < weights.size(); ++i) {
    if (u < weights[i]) return i;
    u -= weights[i];
  }
  return weights.size() - 1;
}

}  // namespace

void CorpusOptions::Validate() const {
  if (shifts < 1) throw std::invalid_argument("corpus needs at least one shift");
  if (runs_per_shift < 1) throw std::invalid_argument("runs per shift must be at least 1");
  if (min_run_slots < 1 || max_run_slots < min_run_slots) {
    throw std::invalid_argument("run length range must satisfy 1 <= min <= max");
  }
  if (!(run_length_decay > 0.0) || !std::isfinite(run_length_decay)) {
    throw std::invalid_argument("run length decay must be positive");
  }
  if (!(stop_contact_probability >= 0.0 && stop_contact_probability <= 1.0)) {
    throw std::invalid_argument("stop contact probability must lie in [0, 1]");
  }
  if (p_quantiles.size() < 2 || p_quantiles.front().first != 0.0 || p_quantiles.back().first != 1.0) {
    throw std::invalid_argument("quantile knots must span levels 0 to 1");
  }
  for (std::size_t i = 1; i < p_quantiles.size(); ++i) {
    if (!(p_quantiles[i].first > p_quantiles[i - 1].first) ||
        !(p_quantiles[i].second >= p_quantiles[i - 1].second)) {
      throw std::invalid_argument("quantile knots must be increasing");
    }
  }
  if (p_quantiles.front().second < 0.0 || p_quantiles.back().second > 1.0) {
    throw std::invalid_argument("quantile values must lie in [0, 1]");
  }
}

double QuantileP(const CorpusOptions& options, double level) {
  const auto& q = options.p_quantiles;
  level = std::clamp(level, 0.0, 1.0);
  for (std::size_t i = 1; i < q.size(); ++i) {
    if (level <= q[i].first) {
      const double w = (level - q[i - 1].first) / (q[i].first - q[i - 1].first);
      return q[i - 1].second + w * (q[i].second - q[i - 1].second);
    }
  }
  return q.back().second;
}

std::vector<ContactTrace> GenerateCorpus(const CorpusOptions& options) {
  options.Validate();
  Rng rng(options.seed);
  // Stratified levels give an empirical p distribution close to the target
  // even for small corpora; the shuffle decouples p from shift order.
  std::vector<double> ps(static_cast<std::size_t>(options.shifts));
  for (std::size_t i = 0; i < ps.size(); ++i) {
    ps[i] = QuantileP(options, (static_cast<double>(i) + 0.5) / static_cast<double>(ps.size()));
  }
  for (std::size_t i = ps.size(); i > 1; --i) {
    std::swap(ps[i - 1], ps[static_cast<std::size_t>(rng.Integer(0, static_cast<std::int64_t>(i) - 1))]);
  }

  std::vector<double> run_weights;
  for (int k = 0; k <= options.max_run_slots - options.min_run_slots; ++k) {
    run_weights.push_back(std::pow(options.run_length_decay, k));
  }

  std::vector<ContactTrace> out;
  out.reserve(ps.size());
  for (std::size_t i = 0; i < ps.size(); ++i) {
    ContactTrace trace;
    char id[32];
    std::snprintf(id, sizeof id, "shift%04zu", i);
    trace.shift_id = id;
    std::vector<std::uint8_t> mask;
    for (int r = 0; r < options.runs_per_shift; ++r) {
      const auto len = static_cast<std::size_t>(options.min_run_slots + DrawIndex(run_weights, rng));
      mask.insert(mask.end(), len - 1, 0);
      mask.push_back(1);
    }
    const std::size_t n = mask.size();
    trace.slots.assign(n, 0);
    std::vector<std::size_t> others;
    long stop_hits = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (mask[j]) {
        if (rng.Bernoulli(options.stop_contact_probability)) {
          trace.slots[j] = 1;
          ++stop_hits;
        }
      } else {
        others.push_back(j);
      }
    }
    // Top up to round(p * n) useful slots, placed uniformly among the rest.
    const long wanted = std::lround(ps[i] * static_cast<double>(n)) - stop_hits;
    const auto k = static_cast<std::size_t>(std::clamp<long>(wanted, 0, static_cast<long>(others.size())));
    for (std::size_t j = 0; j < k; ++j) {
      const auto pick = static_cast<std::size_t>(rng.Integer(static_cast<std::int64_t>(j),
                                                             static_cast<std::int64_t>(others.size()) - 1));
      std::swap(others[j], others[pick]);
      trace.slots[others[j]] = 1;
    }
    trace.mask = std::move(mask);
    out.push_back(std::move(trace));
  }
  return out;
}

ContactTrace GenerateIidTrace(double p, std::size_t slots, std::uint64_t seed, std::string shift_id) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0, 1]");
  if (slots == 0) throw std::invalid_argument("trace needs at least one slot");
  Rng rng(seed);
  ContactTrace trace;
  trace.shift_id = std::move(shift_id);
  trace.slots.resize(slots);
  for (auto& b : trace.slots) b = rng.Bernoulli(p) ? 1 : 0;
  return trace;
}

}  // namespace agectl
