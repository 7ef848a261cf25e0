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

#include "agectl/model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace agectl {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void Require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

// Non-increasing check tolerates representation noise in tabular input.
constexpr double kMonotoneSlack = 1e-12;

}  // namespace

int ToInt(Action a) { return static_cast<int>(a); }

Action ActionFromInt(int a) {
  Require(a >= 0 && a <= 2, "action must be 0, 1 or 2");
  return static_cast<Action>(a);
}

UtilityFunction UtilityFunction::MakeLinear(int M) {
  Require(M >= 1, "linear utility needs M >= 1");
  return UtilityFunction(Linear{M});
}

UtilityFunction UtilityFunction::MakeStep(double v, int k) {
  Require(std::isfinite(v) && v >= 0.0, "step utility needs finite v >= 0");
  Require(k >= 0, "step utility needs k >= 0");
  return UtilityFunction(Step{v, k});
}

UtilityFunction UtilityFunction::MakeTabular(std::vector<double> values) {
  Require(!values.empty(), "tabular utility needs at least one value");
  for (double v : values) Require(std::isfinite(v), "tabular utility values must be finite");
  return UtilityFunction(Tabular{std::move(values)});
}

double UtilityFunction::Raw(Age x) const {
  if (x < 1) throw std::out_of_range("utility evaluated at age < 1");
  return std::visit(
      Overloaded{
          [x](const Linear& f) { return static_cast<double>(std::max(f.M - x, 0)); },
          [x](const Step& f) { return x <= f.k ? f.v : 0.0; },
          [x](const Tabular& f) {
            if (static_cast<std::size_t>(x) > f.values.size()) {
              throw std::out_of_range("tabular utility evaluated beyond its table");
            }
            return f.values[x - 1];
          },
      },
      form_);
}

std::string UtilityFunction::Describe() const {
  std::ostringstream os;
  os.precision(12);
  std::visit(Overloaded{
                 [&](const Linear& f) { os << "linear(M=" << f.M << ")"; },
                 [&](const Step& f) { os << "step(v=" << f.v << ",k=" << f.k << ")"; },
                 [&](const Tabular& f) {
                   os << "tabular(";
                   for (std::size_t i = 0; i < f.values.size(); ++i) {
                     os << (i ? ";" : "") << f.values[i];
                   }
                   os << ")";
                 },
             },
             form_);
  if (offset_ != 0.0) os << "-" << offset_;
  return os.str();
}

UtilityFunction NormalizeUtility(const UtilityFunction& u, int M) {
  Require(M >= 1, "normalization needs M >= 1");
  for (Age x = 1; x < M; ++x) {
    if (u.Raw(x + 1) > u.Raw(x) + kMonotoneSlack) {
      std::ostringstream os;
      os << "utility increases between ages " << x << " and " << x + 1;
      throw std::invalid_argument(os.str());
    }
  }
  UtilityFunction out = u;
  out.offset_ = u.Raw(M);
  return out;
}

double SystemParams::MaxBonus() const {
  return P3G ? std::min(P, *P3G) : P;
}

void SystemParams::Validate() const {
  Require(std::isfinite(p) && p > 0.0 && p < 1.0, "p must lie in (0, 1)");
  Require(M >= 2, "M must be at least 2");
  Require(std::isfinite(G) && G >= 0.0, "G must be a finite nonnegative number");
  Require(std::isfinite(P) && P >= 0.0, "P must be a finite nonnegative number");
  if (P3G) {
    Require(std::isfinite(*P3G) && *P3G >= 0.0,
            "P3G must be a finite nonnegative number or unavailable");
  }
  Require(std::isfinite(B) && B >= 0.0, "B must be a finite nonnegative number");
  Require(B <= MaxBonus(), "B must not exceed min(P, P3G)");
  for (Age x = 1; x < M; ++x) {
    Require(utility(x + 1) <= utility(x) + kMonotoneSlack, "utility must be non-increasing");
  }
  Require(std::abs(utility(M)) <= 1e-12, "utility must be normalized so that U(M) = 0");
}

SystemParams LinearParams(double p, int M, double b, double P, double B) {
  SystemParams params;
  params.p = p;
  params.M = M;
  params.G = b * static_cast<double>(M - 1);
  params.P = P;
  params.B = B;
  params.utility = UtilityFunction::MakeLinear(M);
  return params;
}

double InstantaneousReward(const SystemParams& params, Age x, Action a, bool contact) {
  if (x < 1 || x > params.M) throw std::out_of_range("age outside [1, M]");
  if (a == Action::kWifiThen3G && !params.has_3g()) {
    throw std::invalid_argument("action 2 requires an available 3G price");
  }
  const double activation = a == Action::kInactive ? 0.0 : params.G;
  double price = 0.0;
  if (a != Action::kInactive && contact) {
    price = params.P;
  } else if (a == Action::kWifiThen3G) {
    price = *params.P3G;
  }
  return params.utility(x) - activation - std::max(price - params.B, 0.0);
}

Age NextAge(Age x, Action a, bool contact, int M) {
  if (M < 1 || x < 1 || x > M) throw std::out_of_range("age outside [1, M]");
  if (a == Action::kWifiThen3G || (a == Action::kWifi && contact)) return 1;
  return std::min(x + 1, M);
}

Policy::Policy(std::vector<Action> actions) : actions_(std::move(actions)) {}

Policy Policy::FromThresholds(int M, Threshold s, Threshold s3g) {
  Require(M >= 1, "policy needs M >= 1");
  Require(s >= 1 && s <= M + 1, "threshold s must lie in [1, M+1]");
  Require(s3g >= s && s3g <= M + 1, "threshold s_3G must lie in [s, M+1]");
  std::vector<Action> actions(static_cast<std::size_t>(M));
  for (Age x = 1; x <= M; ++x) {
    actions[x - 1] = x < s ? Action::kInactive : (x < s3g ? Action::kWifi : Action::kWifiThen3G);
  }
  return Policy(std::move(actions));
}

Action Policy::operator()(Age x) const {
  if (x < 1 || x > M()) throw std::out_of_range("policy evaluated outside [1, M]");
  return actions_[x - 1];
}

bool Policy::Uses(Action a) const {
  return std::find(actions_.begin(), actions_.end(), a) != actions_.end();
}

std::string Policy::ToString() const {
  std::string out;
  out.reserve(actions_.size());
  for (Action a : actions_) out.push_back(static_cast<char>('0' + ToInt(a)));
  return out;
}

}  // namespace agectl
