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

#include "agectl/population.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>

#include "agectl/parallel.hpp"
#include "agectl/publisher.hpp"
#include "agectl/random.hpp"

namespace agectl {
namespace {

struct UserState {
  Age age = 1;
  std::size_t cursor = 0;
  Rng rng{0};
  UserOutcome outcome;
  double age_sum = 0.0;
};

// Plays tau slots with WiFi threshold s and returns the served updates.
std::size_t PlayRound(UserState& user, const ContactTrace* trace, const SystemParams& params,
                      Threshold s, int tau, bool record_ages) {
  std::size_t served = 0;
  for (int j = 0; j < tau; ++j) {
    bool contact;
    if (trace) {
      contact = trace->slots[user.cursor] != 0;
      user.cursor = (user.cursor + 1) % trace->size();
    } else {
      contact = user.rng.Bernoulli(params.p);
    }
    const Action a = user.age >= s ? Action::kWifi : Action::kInactive;
    if (record_ages) user.outcome.ages.push_back(user.age);
    user.age_sum += user.age;
    user.outcome.total_reward += InstantaneousReward(params, user.age, a, contact);
    if (a == Action::kWifi && contact) ++served;
    user.age = NextAge(user.age, a, contact, params.M);
  }
  user.outcome.slots += static_cast<std::size_t>(tau);
  user.outcome.updates += served;
  return served;
}

void CheckOptions(const SystemParams& params, const PopulationOptions& options, std::size_t pool) {
  params.Validate();
  if (options.tau < 1) throw std::invalid_argument("tau must be at least 1");
  if (options.rounds < 1) throw std::invalid_argument("rounds must be at least 1");
  if (options.initial_age < 1 || options.initial_age > params.M) {
    throw std::invalid_argument("initial age must lie in [1, M]");
  }
  if (options.controller) options.controller->Validate();
  for (const auto& change : options.changes) {
    if (change.users < 0 || static_cast<std::size_t>(change.users) > pool) {
      throw std::invalid_argument("population change exceeds the user pool");
    }
  }
}

// Round loop shared by the stochastic and the noise-free simulators.
// play(active, params at B_t, s*(B_t)) returns R_t.
template <class Play>
std::vector<PopulationRound> RunRounds(int pool, const SystemParams& params,
                                       const PopulationOptions& options, Play&& play) {
  std::vector<PopulationRound> rounds;
  rounds.reserve(static_cast<std::size_t>(options.rounds));
  double bonus = options.bonus;
  int active = pool;
  int step = 1;
  for (int t = 1; t <= options.rounds; ++t) {
    for (const auto& change : options.changes) {
      if (change.round == t) {
        active = change.users;
        if (options.reset_on_change) step = 1;
      }
    }
    SystemParams at = params;
    at.B = std::min(bonus, params.MaxBonus());
    const Threshold s = InducedThreshold(params, at.B);
    const double requests = play(active, at, s);
    const double rate = requests / options.tau;
    rounds.push_back(PopulationRound{t, active, bonus, requests, rate, s});
    if (options.controller) bonus = LearningStep(step++, bonus, rate, *options.controller);
  }
  return rounds;
}

}  // namespace

PopulationResult SimulatePopulation(const std::vector<PopulationUser>& users,
                                    const std::vector<ContactTrace>& traces,
                                    const SystemParams& params, const PopulationOptions& options) {
  CheckOptions(params, options, users.size());
  std::vector<UserState> state(users.size());
  for (std::size_t i = 0; i < users.size(); ++i) {
    const auto& u = users[i];
    if (u.trace) {
      if (*u.trace >= traces.size()) throw std::invalid_argument("user refers to a missing trace");
      if (traces[*u.trace].size() == 0) throw std::invalid_argument("user refers to an empty trace");
      state[i].cursor = u.phase % traces[*u.trace].size();
    }
    state[i].age = options.initial_age;
    state[i].rng = Rng(DeriveSeed(options.seed, i));
  }

  PopulationResult out;
  out.rounds = RunRounds(static_cast<int>(users.size()), params, options,
                         [&](int active, const SystemParams& at, Threshold s) {
                           std::vector<std::size_t> served(static_cast<std::size_t>(active));
                           ParallelFor(served.size(), [&](std::size_t i) {
                             const ContactTrace* trace =
                                 users[i].trace ? &traces[*users[i].trace] : nullptr;
                             served[i] = PlayRound(state[i], trace, at, s, options.tau,
                                                   options.record_ages);
                           });
                           double requests = 0.0;
                           for (auto n : served) requests += static_cast<double>(n);
                           return requests;
                         });
  out.users.reserve(state.size());
  for (auto& u : state) {
    if (u.outcome.slots) u.outcome.mean_age = u.age_sum / static_cast<double>(u.outcome.slots);
    out.users.push_back(std::move(u.outcome));
  }
  return out;
}

PopulationResult SimulateExpectedPopulation(int users, const SystemParams& params,
                                            const PopulationOptions& options) {
  if (users < 0) throw std::invalid_argument("user count must be nonnegative");
  CheckOptions(params, options, static_cast<std::size_t>(users));
  PopulationResult out;
  out.rounds = RunRounds(users, params, options, [&](int active, const SystemParams& at, Threshold s) {
    return MessageRateAtThreshold(s, at.p, at.M, active) * options.tau;
  });
  return out;
}

RoundOracle ChainPopulationOracle(const SystemParams& params, int N, int tau, std::uint64_t seed) {
  if (N < 1) throw std::invalid_argument("population needs at least one user");
  if (tau < 1) throw std::invalid_argument("tau must be at least 1");
  auto state = std::make_shared<std::vector<UserState>>(static_cast<std::size_t>(N));
  for (std::size_t i = 0; i < state->size(); ++i) (*state)[i].rng = Rng(DeriveSeed(seed, i));
  return [params, tau, state](double bonus) {
    SystemParams at = params;
    at.B = bonus;
    const Threshold s = InducedThreshold(params, bonus);
    double requests = 0.0;
    for (auto& user : *state) requests += static_cast<double>(PlayRound(user, nullptr, at, s, tau, false));
    return requests;
  };
}

void WritePopulationCsv(std::ostream& out, const std::vector<PopulationRound>& rounds) {
  const auto precision = out.precision(12);
  out << "round,bonus,requests,rate,users,threshold\n";
  for (const auto& r : rounds) {
    out << r.t << ',' << r.bonus << ',' << r.requests << ',' << r.rate << ',' << r.users << ','
        << r.threshold << '\n';
  }
  out.precision(precision);
}

}  // namespace agectl
