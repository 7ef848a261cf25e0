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

#include "agectl/learning.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace agectl {

void LearningConfig::Validate() const {
  if (!(max_bonus >= 0.0) || !std::isfinite(max_bonus)) throw std::invalid_argument("max bonus must be >= 0");
  if (!(initial_bonus >= 0.0 && initial_bonus <= max_bonus)) {
    throw std::invalid_argument("initial bonus must lie in [0, max bonus]");
  }
  if (tau < 1) throw std::invalid_argument("tau must be at least 1");
  if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  if (max_rounds < 1) throw std::invalid_argument("max_rounds must be at least 1");
}

double LearningStep(int t, double bonus, double rate, const LearningConfig& config) {
  if (t < 1) throw std::invalid_argument("round index starts at 1");
  const double next = bonus + config.alpha * (config.target - rate) / static_cast<double>(t);
  return std::min(config.max_bonus, std::max(0.0, next));
}

LearningTrajectory RunLearning(const RoundOracle& env, const LearningConfig& config) {
  config.Validate();
  LearningTrajectory out;
  double bonus = config.initial_bonus;
  for (int t = 1; t <= config.max_rounds; ++t) {
    const double requests = env(bonus);
    const double rate = requests / static_cast<double>(config.tau);
    out.rounds.push_back(LearningRound{t, bonus, requests, rate});
    out.final_gap = std::abs(config.target - rate);
    if (out.final_gap <= config.epsilon) {
      out.converged = true;
      break;
    }
    bonus = LearningStep(t, bonus, rate, config);
  }
  out.final_bonus = bonus;
  return out;
}

RoundOracle ExpectedRateOracle(const SystemParams& params, int N, int tau) {
  return [params, N, tau](double bonus) {
    SystemParams at = params;
    at.B = bonus;
    return MessageRate(at, N) * tau;
  };
}

ConvergenceReport MakeConvergenceReport(const std::vector<LearningRound>& rounds,
                                        const BonusInterval& range) {
  ConvergenceReport out;
  std::size_t tail_start = rounds.size() / 2;
  for (std::size_t i = rounds.size(); i-- > 0;) {
    if (!range.Contains(rounds[i].bonus)) break;
    out.entry_round = rounds[i].t;
    tail_start = i;
  }
  if (tail_start < rounds.size()) {
    const auto [lo, hi] = std::minmax_element(
        rounds.begin() + static_cast<std::ptrdiff_t>(tail_start), rounds.end(),
        [](const LearningRound& a, const LearningRound& b) { return a.rate < b.rate; });
    out.tail_rate_min = lo->rate;
    out.tail_rate_max = hi->rate;
  }
  return out;
}

void WriteTrajectoryCsv(std::ostream& out, const std::vector<LearningRound>& rounds) {
  out << "round,bonus,requests,rate\n";
  const auto precision = out.precision(12);
  for (const auto& r : rounds) out << r.t << ',' << r.bonus << ',' << r.requests << ',' << r.rate << '\n';
  out.precision(precision);
}

LearningPreset PresetByName(const std::string& name, bool trace_driven) {
  LearningPreset preset;
  preset.name = name;
  if (name == "main-text") {
    preset.params = LinearParams(0.54, 30, 0.0, 40.0);
    preset.params.G = 0.4;
    preset.config.max_bonus = 40.0;
    preset.config.target = 11.0;
    preset.config.tau = 100;
    preset.config.alpha = 1.0;
    preset.initial_users = 50;
    preset.later_users = 20;
    preset.change_round = 200;
    preset.rounds = 400;
  } else if (name == "appendix") {
    preset.params = LinearParams(0.54, 30, 0.0, 100.0);
    preset.params.G = 0.4;
    preset.config.max_bonus = 100.0;
    preset.config.target = 11.0;
    preset.config.tau = 10;
    preset.config.alpha = trace_driven ? 10.0 : 20.0;
    preset.initial_users = 105;
    preset.later_users = 90;
    preset.change_round = 100;
    preset.rounds = 200;
  } else {
    throw std::invalid_argument("unknown learning preset '" + name + "'");
  }
  preset.config.initial_bonus = preset.config.max_bonus;
  preset.config.max_rounds = preset.rounds;
  return preset;
}

}  // namespace agectl
