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

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "agectl/analytics.hpp"
#include "agectl/config.hpp"
#include "agectl/corpus.hpp"
#include "agectl/learning.hpp"
#include "agectl/mdp_solver.hpp"
#include "agectl/population.hpp"
#include "agectl/publisher.hpp"
#include "agectl/threshold_search.hpp"
#include "agectl/trace.hpp"
#include "agectl/trace_sim.hpp"
#include "table.hpp"

namespace agectl::cli {
namespace {

// Bad input data or parameters (exit code 2).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GlobalOptions {
  std::uint64_t seed = 1;
  std::string output;
  std::string format = "csv";
};

// Model parameter flags shared by most subcommands. Flags override the
// config file, which overrides the subcommand's base parameters.
struct ParamFlags {
  std::string config;
  std::map<std::string, std::string> values;
  std::vector<std::pair<std::string, CLI::Option*>> options;
  std::string b;
  CLI::Option* b_option = nullptr;
};

void AddParamFlags(CLI::App* app, ParamFlags& flags) {
  app->add_option("--config", flags.config, "key=value parameter file");
  const std::vector<std::tuple<std::string, std::string, std::string>> table = {
      {"--p", "p", "useful contact probability per slot"},
      {"--M", "M", "maximum age"},
      {"--G", "G", "activation cost per slot"},
      {"--P", "P", "WiFi price per update"},
      {"--P3G", "P3G", "3G price per update (inf = unavailable)"},
      {"--B", "B", "bonus per update"},
      {"--utility", "utility.form", "linear | step | tabular"},
      {"--v", "utility.v", "step utility value"},
      {"--k", "utility.k", "step utility last useful age"},
      {"--values", "utility.values", "tabular utility values, comma separated"},
  };
  for (const auto& [flag, key, help] : table) {
    flags.options.emplace_back(key, app->add_option(flag, flags.values[key], help));
  }
  flags.b_option = app->add_option("--b", flags.b, "energy cost scaled by 1/(M-1); sets G = b (M-1)");
}

struct ResolvedParams {
  SystemParams params;
  std::string config_path;
  std::string overrides;
};

ResolvedParams ResolveParams(const ParamFlags& flags, KeyValueConfig base = {}) {
  ResolvedParams out;
  if (!flags.config.empty()) {
    out.config_path = flags.config;
    for (auto& [key, value] : LoadKeyValueConfig(flags.config)) base[key] = value;
  }
  std::ostringstream overrides;
  bool g_flag = false;
  for (const auto& [key, option] : flags.options) {
    if (option->count() == 0) continue;
    base[key] = flags.values.at(key);
    overrides << (overrides.tellp() > 0 ? " " : "") << option->get_name() << '=' << flags.values.at(key);
    g_flag |= key == "G";
  }
  if (flags.b_option->count() > 0) {
    if (g_flag) throw InputError("--b and --G are mutually exclusive");
    overrides << (overrides.tellp() > 0 ? " " : "") << "--b=" << flags.b;
    base["G"] = "0";
  }
  out.overrides = overrides.str();
  out.params = ParamsFromConfig(base);
  if (flags.b_option->count() > 0) {
    out.params.G = ParseNumber(flags.b, "b") * static_cast<double>(out.params.M - 1);
    try {
      out.params.Validate();
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }
  return out;
}

// Destination stream plus the header every output starts with.
class Output {
 public:
  Output(const GlobalOptions& global, std::ostream& fallback) : format_(ParseFormat(global.format)) {
    if (!global.output.empty()) {
      file_ = std::make_unique<std::ofstream>(global.output);
      if (!*file_) throw InputError("cannot open output file " + global.output);
    }
    out_ = file_ ? file_.get() : &fallback;
  }

  std::ostream& stream() { return *out_; }
  Format format() const { return format_; }
  void Comment(const std::string& line) { *out_ << "# " << line << '\n'; }

  void Header(const std::string& command, const GlobalOptions& global,
              const ResolvedParams* params) {
    Comment("agectl " + command);
    if (params) {
      Comment("params: " + FormatParams(params->params));
      Comment("config: " + (params->config_path.empty() ? std::string("none") : params->config_path));
      Comment("overrides: " + (params->overrides.empty() ? std::string("none") : params->overrides));
    }
    Comment("seed: " + std::to_string(global.seed));
  }

 private:
  static Format ParseFormat(const std::string& name) {
    return name == "table" ? Format::kTable : Format::kCsv;
  }

  Format format_;
  std::unique_ptr<std::ofstream> file_;
  std::ostream* out_ = nullptr;
};

std::string Bool(bool b) { return b ? "true" : "false"; }

std::string JoinThresholds(const std::vector<Threshold>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + std::to_string(v[i]);
  return out;
}

std::vector<double> ParseGrid(const std::string& text) {
  std::vector<double> grid;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) grid.push_back(ParseNumber(item, "grid"));
  if (grid.empty()) throw InputError("empty grid");
  if (!std::is_sorted(grid.begin(), grid.end())) throw InputError("grid must be ascending");
  return grid;
}

// ---------------------------------------------------------------- solve

struct SolveArgs {
  ParamFlags params;
  double tol = 1e-10;
  long max_iter = 1'000'000;
};

int RunSolve(const SolveArgs& args, const GlobalOptions& global, std::ostream& out) {
  const ResolvedParams resolved = ResolveParams(args.params);
  const SystemParams& params = resolved.params;
  SolverOptions options;
  options.tol = args.tol;
  options.max_iter = args.max_iter;
  const SolveReport report = SolveUserProblem(params, options);

  Output o(global, out);
  o.Header("solve", global, &resolved);
  Table table({"field", "value"});
  table.AddRow({"policy", report.policy.ToString()});
  const auto structure = VerifyThresholdStructure(report.policy);
  if (const auto* pair = std::get_if<ThresholdPair>(&structure)) {
    table.AddRow({"s", std::to_string(pair->s)});
    table.AddRow({"s_3g", std::to_string(pair->s_3g)});
  } else {
    const auto& v = std::get<StructureViolation>(structure);
    table.AddRow({"structure_violation_at", std::to_string(v.x)});
  }
  table.AddRow({"gain_mdp", Num(report.value.gain)});
  double closed_form = 0.0;
  if (params.has_3g()) {
    const TwoThresholdResult best = OptimalTwoThresholds(params);
    closed_form = best.reward;
    table.AddRow({"closed_form_s", std::to_string(best.s_wifi)});
    table.AddRow({"closed_form_s_3g", std::to_string(best.s_3g)});
  } else {
    const ThresholdResult best = OptimalThreshold(params);
    closed_form = best.reward;
    table.AddRow({"s_star", std::to_string(best.s_star)});
    table.AddRow({"optima", JoinThresholds(best.all_optima)});
    if (auto phi = StepCriticalPoint(params)) table.AddRow({"phi", Num(*phi)});
  }
  table.AddRow({"gain_closed_form", Num(closed_form)});
  table.AddRow({"gain_difference", Num(std::abs(report.value.gain - closed_form))});
  table.AddRow({"always_active", Bool(AlwaysActive(params))});
  table.AddRow({"always_inactive", Bool(AlwaysInactive(params))});
  table.AddRow({"iterations", std::to_string(report.iterations)});
  table.AddRow({"residual", Num(report.residual)});
  table.AddRow({"converged", Bool(report.converged())});
  table.Render(o.stream(), o.format());
  return report.converged() ? kOk : kNonConvergence;
}

// ---------------------------------------------------------------- sweep

struct SweepArgs {
  ParamFlags params;
  std::optional<int> s;
  std::string param;
  std::string grid;
};

int RunSweep(const SweepArgs& args, const GlobalOptions& global, std::ostream& out) {
  const ResolvedParams resolved = ResolveParams(args.params);
  const SystemParams& params = resolved.params;
  Output o(global, out);

  if (args.param.empty()) {
    if (!args.grid.empty()) throw InputError("--grid needs --param");
    if (args.s && (*args.s < 1 || *args.s > params.M + 1)) {
      throw InputError("--s must lie in [1, M+1]");
    }
    o.Header("sweep", global, &resolved);
    Table table({"s", "reward", "age", "update_rate"});
    const Threshold lo = args.s.value_or(1);
    const Threshold hi = args.s.value_or(params.M + 1);
    for (Threshold s = lo; s <= hi; ++s) {
      const ChainSummary c = SummarizeThreshold(params, s);
      table.AddRow({std::to_string(s), Num(c.gain), Num(c.age), Num(c.update_rate)});
    }
    table.Render(o.stream(), o.format());
    return kOk;
  }

  if (args.grid.empty()) throw InputError("--param needs --grid");
  const std::vector<double> grid = ParseGrid(args.grid);
  const bool scaled = args.param == "b";
  const SweepParameter parameter = scaled ? SweepParameter::kG : SweepParameterFromString(args.param);
  std::vector<double> values = grid;
  if (scaled) {
    for (double& v : values) v *= static_cast<double>(params.M - 1);
  }
  const MonotonicityReport report = MonotonicityCheck(params, parameter, values);

  o.Header("sweep", global, &resolved);
  o.Comment("grid: " + args.param + " = " + args.grid);
  o.Comment("s_star: " + JoinThresholds(report.thresholds));
  if (report.ok()) {
    o.Comment("monotonicity: ok");
  } else {
    const std::size_t i = *report.first_violation;
    o.Comment("monotonicity: violated between " + Num(grid[i]) + " and " + Num(grid[i + 1]));
  }
  Table table({args.param, "s", "reward", "age", "optimal"});
  for (std::size_t i = 0; i < grid.size(); ++i) {
    SystemParams at = params;
    switch (parameter) {
      case SweepParameter::kG: at.G = values[i]; break;
      case SweepParameter::kP: at.P = values[i]; break;
      case SweepParameter::kB: at.B = values[i]; break;
    }
    for (Threshold s = 1; s <= params.M + 1; ++s) {
      const ChainSummary c = SummarizeThreshold(at, s);
      table.AddRow({Num(grid[i]), std::to_string(s), Num(c.gain), Num(c.age),
                    s == report.thresholds[i] ? "1" : "0"});
    }
  }
  table.Render(o.stream(), o.format());
  return kOk;
}

// ---------------------------------------------------------------- publisher

struct PublisherArgs {
  ParamFlags params;
  int N = 1;
  double T = 1.0;
};

int RunPublisher(const PublisherArgs& args, const GlobalOptions& global, std::ostream& out) {
  const ResolvedParams resolved = ResolveParams(args.params);
  PublisherInstance instance{resolved.params, args.N, args.T};
  try {
    instance.Validate();
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  const PublisherOutcome outcome = OptimalBonus(instance);

  Output o(global, out);
  o.Header("publisher", global, &resolved);
  o.Comment("N=" + std::to_string(args.N) + " T=" + Num(args.T));
  Table table({"field", "value"});
  if (const auto* sol = std::get_if<BonusSolution>(&outcome)) {
    table.AddRow({"status", "feasible"});
    table.AddRow({"target_threshold", std::to_string(sol->target)});
    table.AddRow({"attained_threshold", std::to_string(sol->attained)});
    table.AddRow({"bonus_lo", Num(sol->bonus.lo)});
    table.AddRow({"bonus_hi", Num(sol->bonus.hi)});
    table.AddRow({"rate", Num(sol->achieved_rate)});
    table.AddRow({"age", Num(sol->achieved_age)});
  } else {
    const auto& inf = std::get<Infeasible>(outcome);
    table.AddRow({"status", "infeasible"});
    table.AddRow({"target_threshold", std::to_string(inf.target)});
    table.AddRow({"max_threshold", std::to_string(inf.max_threshold)});
  }
  table.Render(o.stream(), o.format());
  return kOk;
}

// ---------------------------------------------------------------- learn

struct LearnArgs {
  ParamFlags params;
  std::string preset = "main-text";
  std::string env = "analytic";
  std::string traces;
  std::optional<int> users;
  std::string drop;
  std::optional<int> rounds;
  std::optional<int> tau;
  std::optional<double> alpha;
  std::optional<double> target;
  std::optional<double> max_bonus;
  std::optional<double> initial_bonus;
  bool no_reset = false;
  int buses = 2;
};

// "users@round", or "none".
std::optional<PopulationChange> ParseDrop(const std::string& text) {
  if (text == "none") return std::nullopt;
  const auto at = text.find('@');
  if (at == std::string::npos) throw InputError("--drop expects users@round, e.g. 20@200");
  PopulationChange change;
  try {
    std::size_t used = 0;
    change.users = std::stoi(text.substr(0, at), &used);
    if (used != at) throw std::invalid_argument("users");
    const std::string round = text.substr(at + 1);
    change.round = std::stoi(round, &used);
    if (used != round.size()) throw std::invalid_argument("round");
  } catch (const std::exception&) {
    throw InputError("--drop expects users@round, e.g. 20@200");
  }
  if (change.users < 0 || change.round < 1) throw InputError("--drop needs users >= 0 and round >= 1");
  return change;
}

int RunLearn(const LearnArgs& args, const GlobalOptions& global, std::ostream& out) {
  LearningPreset preset;
  try {
    preset = PresetByName(args.preset, args.env == "trace");
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  const ResolvedParams resolved = ResolveParams(args.params, ConfigFromParams(preset.params));
  const SystemParams& params = resolved.params;

  LearningConfig config = preset.config;
  if (args.tau) config.tau = *args.tau;
  if (args.alpha) config.alpha = *args.alpha;
  if (args.target) config.target = *args.target;
  config.max_bonus = args.max_bonus.value_or(std::min(config.max_bonus, params.MaxBonus()));
  config.initial_bonus = args.initial_bonus.value_or(config.max_bonus);
  const int rounds = args.rounds.value_or(preset.rounds);
  config.max_rounds = rounds;
  const int users = args.users.value_or(preset.initial_users);
  std::optional<PopulationChange> change;
  if (args.drop.empty()) {
    change = PopulationChange{preset.change_round, preset.later_users};
  } else {
    change = ParseDrop(args.drop);
  }
  if (config.max_bonus > params.MaxBonus()) throw InputError("--B-hat must not exceed min(P, P3G)");
  if (users < 1) throw InputError("--N must be at least 1");
  if (change && change->users > users) throw InputError("--drop cannot add users");
  try {
    config.Validate();
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }

  PopulationOptions options;
  options.tau = config.tau;
  options.rounds = rounds;
  options.bonus = config.initial_bonus;
  options.controller = config;
  if (change) options.changes.push_back(*change);
  options.reset_on_change = !args.no_reset;
  options.seed = global.seed;

  PopulationResult result;
  if (args.env == "expected") {
    result = SimulateExpectedPopulation(users, params, options);
  } else if (args.env == "analytic") {
    result = SimulatePopulation(std::vector<PopulationUser>(static_cast<std::size_t>(users)), {},
                                params, options);
  } else {
    if (args.traces.empty()) throw InputError("--env trace needs --traces");
    const std::vector<ContactTrace> traces = LoadTraceFile(args.traces);
    if (traces.empty()) throw InputError("trace file has no traces");
    if (args.buses < 1) throw InputError("--buses must be at least 1");
    const std::size_t buses = std::min(traces.size(), static_cast<std::size_t>(args.buses));
    std::vector<PopulationUser> pool(static_cast<std::size_t>(users));
    for (std::size_t i = 0; i < pool.size(); ++i) pool[i].trace = i % buses;
    result = SimulatePopulation(pool, traces, params, options);
  }

  Output o(global, out);
  o.Header("learn", global, &resolved);
  std::ostringstream line;
  line << "preset=" << preset.name << " env=" << args.env << " tau=" << config.tau
       << " alpha=" << Num(config.alpha) << " T=" << Num(config.target)
       << " B_hat=" << Num(config.max_bonus) << " B0=" << Num(config.initial_bonus)
       << " rounds=" << rounds << " N=" << users
       << " drop=" << (change ? std::to_string(change->users) + "@" + std::to_string(change->round) : "none")
       << " reset_on_change=" << Bool(options.reset_on_change);
  if (args.env == "trace") line << " traces=" << args.traces << " buses=" << args.buses;
  o.Comment(line.str());
  std::vector<int> regimes = {users};
  if (change) regimes.push_back(change->users);
  for (int n : regimes) {
    if (n < 1) continue;
    SystemParams at = params;
    at.B = 0.0;
    const PublisherOutcome best = OptimalBonus(PublisherInstance{at, n, config.target});
    if (const auto* sol = std::get_if<BonusSolution>(&best)) {
      o.Comment("optimal interval N=" + std::to_string(n) + ": [" + Num(sol->bonus.lo) + ", " +
                Num(sol->bonus.hi) + "] s=" + std::to_string(sol->attained));
    } else {
      o.Comment("optimal interval N=" + std::to_string(n) + ": infeasible");
    }
  }
  Table table({"round", "bonus", "requests", "rate", "users", "threshold"});
  for (const auto& r : result.rounds) {
    table.AddRow({std::to_string(r.t), Num(r.bonus), Num(r.requests), Num(r.rate),
                  std::to_string(r.users), std::to_string(r.threshold)});
  }
  table.Render(o.stream(), o.format());
  return kOk;
}

// ---------------------------------------------------------------- simulate

struct SimulateArgs {
  ParamFlags params;
  std::string traces;
  std::string mode = "compare";
  int replications = 40;
  std::optional<int> s;
  bool mask = false;
};

std::string OptionalNum(const std::optional<double>& v) { return v ? Num(*v) : ""; }

int RunSimulate(const SimulateArgs& args, const GlobalOptions& global, std::ostream& out) {
  const ResolvedParams resolved = ResolveParams(args.params);
  const SystemParams& params = resolved.params;
  if (args.replications < 1) throw InputError("--replications must be at least 1");
  const std::vector<ContactTrace> traces = LoadTraceFile(args.traces);
  if (traces.empty()) throw InputError("trace file has no traces");

  Output o(global, out);
  o.Header("simulate", global, &resolved);
  o.Comment("traces=" + args.traces + " shifts=" + std::to_string(traces.size()) +
            " mode=" + args.mode + " replications=" + std::to_string(args.replications));

  if (args.mode == "compare") {
    const auto rows = CompareShifts(traces, params, args.replications);
    std::vector<double> ps;
    std::size_t within_two = 0, compared = 0;
    for (const auto& r : rows) {
      ps.push_back(r.p_hat);
      if (r.s_model) {
        ++compared;
        within_two += std::abs(r.s_trace - *r.s_model) <= 2;
      }
    }
    std::sort(ps.begin(), ps.end());
    const std::size_t n = ps.size();
    const double median = n % 2 ? ps[n / 2] : 0.5 * (ps[n / 2 - 1] + ps[n / 2]);
    o.Comment("median p_hat: " + Num(median));
    if (compared) {
      o.Comment("shifts with |s_trace - s_model| <= 2: " + std::to_string(within_two) + "/" +
                std::to_string(compared));
    }
    Table table({"shift_id", "p_hat", "s_trace", "s_model", "reward_trace", "reward_model_predicted",
                 "reward_model_policy_on_trace"});
    for (const auto& r : rows) {
      table.AddRow({r.shift_id, Num(r.p_hat), std::to_string(r.s_trace),
                    r.s_model ? std::to_string(*r.s_model) : "", Num(r.reward_trace),
                    OptionalNum(r.reward_model_predicted), OptionalNum(r.reward_model_policy_on_trace)});
    }
    table.Render(o.stream(), o.format());
  } else if (args.mode == "flat") {
    const TraceThreshold flat = FlatStrategyOptimum(traces, params, args.replications);
    o.Comment("flat optimum: s=" + std::to_string(flat.s) + " reward=" + Num(flat.reward));
    Table table({"s", "mean_reward"});
    for (std::size_t i = 0; i < flat.curve.size(); ++i) {
      table.AddRow({std::to_string(i + 1), Num(flat.curve[i])});
    }
    table.Render(o.stream(), o.format());
  } else {
    if (args.mask == args.s.has_value()) throw InputError("replay mode needs exactly one of --s and --mask");
    if (args.s && (*args.s < 1 || *args.s > params.M + 1)) throw InputError("--s must lie in [1, M+1]");
    const ReplayPolicy policy =
        args.mask ? ReplayPolicy(MaskPolicy{}) : ReplayPolicy(Policy::WifiThreshold(params.M, *args.s));
    Table table({"shift_id", "slots", "updates", "average_reward", "energy_spent", "fees_paid"});
    for (const auto& t : traces) {
      SimResult r;
      try {
        r = SimulatePolicy(t, params, policy);
      } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
      }
      table.AddRow({t.shift_id, std::to_string(r.slots), std::to_string(r.updates), Num(r.average_reward),
                    Num(r.energy_spent), Num(r.fees_paid)});
    }
    table.Render(o.stream(), o.format());
  }
  return kOk;
}

// ---------------------------------------------------------------- gen-traces

struct GenArgs {
  CorpusOptions corpus;
  std::optional<double> iid_p;
  std::size_t slots = 100000;
};

int RunGenTraces(const GenArgs& args, const GlobalOptions& global, std::ostream& out) {
  std::vector<ContactTrace> traces;
  Output o(global, out);
  o.Header("gen-traces", global, nullptr);
  try {
    if (args.iid_p) {
      traces.push_back(GenerateIidTrace(*args.iid_p, args.slots, global.seed));
      o.Comment("iid p=" + Num(*args.iid_p) + " slots=" + std::to_string(args.slots));
    } else {
      CorpusOptions corpus = args.corpus;
      corpus.seed = global.seed;
      traces = GenerateCorpus(corpus);
      o.Comment("corpus shifts=" + std::to_string(corpus.shifts) + " runs=" +
                std::to_string(corpus.runs_per_shift) + " run_slots=" + std::to_string(corpus.min_run_slots) +
                ".." + std::to_string(corpus.max_run_slots) + " run_decay=" + Num(corpus.run_length_decay) + " stop_p=" + Num(corpus.stop_contact_probability) +
                " median_p=" + Num(TargetMedianP(corpus)));
    }
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  WriteTraces(o.stream(), traces);
  return kOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Aging-control policy analysis and simulation", "agectl"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "agectl 0.1.0");
  GlobalOptions global;
  auto add_global = [&](CLI::App* sub) {
    sub->add_option("--seed", global.seed, "random seed")->capture_default_str();
    sub->add_option("-o,--output", global.output, "output file (default stdout)");
    sub->add_option("--format", global.format, "csv | table")
        ->check(CLI::IsMember({"csv", "table"}))
        ->capture_default_str();
  };

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "optimal policy of one user");
  AddParamFlags(solve_cmd, solve.params);
  solve_cmd->add_option("--tol", solve.tol, "span stopping tolerance")->capture_default_str();
  solve_cmd->add_option("--max-iter", solve.max_iter, "iteration cap")->capture_default_str();
  add_global(solve_cmd);

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "reward and age per threshold");
  AddParamFlags(sweep_cmd, sweep.params);
  sweep_cmd->add_option("--s", sweep.s, "single threshold");
  sweep_cmd->add_option("--param", sweep.param, "grid parameter: G | P | B | b")
      ->check(CLI::IsMember({"G", "P", "B", "b"}));
  sweep_cmd->add_option("--grid", sweep.grid, "ascending comma-separated values");
  add_global(sweep_cmd);

  PublisherArgs publisher;
  auto* publisher_cmd = app.add_subcommand("publisher", "bonus minimizing age under a rate cap");
  AddParamFlags(publisher_cmd, publisher.params);
  publisher_cmd->add_option("--N", publisher.N, "number of users")->required();
  publisher_cmd->add_option("--T", publisher.T, "messages per slot cap")->required();
  add_global(publisher_cmd);

  LearnArgs learn;
  auto* learn_cmd = app.add_subcommand("learn", "online bonus controller experiment");
  AddParamFlags(learn_cmd, learn.params);
  learn_cmd->add_option("--preset", learn.preset, "main-text | appendix")->capture_default_str();
  learn_cmd->add_option("--env", learn.env, "analytic | expected | trace")
      ->check(CLI::IsMember({"analytic", "expected", "trace"}))
      ->capture_default_str();
  learn_cmd->add_option("--traces", learn.traces, "trace file for --env trace");
  learn_cmd->add_option("--N", learn.users, "initial number of users");
  learn_cmd->add_option("--drop", learn.drop, "population change users@round, or none");
  learn_cmd->add_option("--rounds", learn.rounds, "number of rounds");
  learn_cmd->add_option("--tau", learn.tau, "slots per round");
  learn_cmd->add_option("--alpha", learn.alpha, "learning rate");
  learn_cmd->add_option("--T", learn.target, "target messages per slot");
  learn_cmd->add_option("--B-hat", learn.max_bonus, "maximum bonus");
  learn_cmd->add_option("--B0", learn.initial_bonus, "initial bonus");
  learn_cmd->add_flag("--no-reset", learn.no_reset, "keep the step counter across population changes");
  learn_cmd->add_option("--buses", learn.buses, "traces shared by the population (--env trace)")
      ->capture_default_str();
  add_global(learn_cmd);

  SimulateArgs simulate;
  auto* simulate_cmd = app.add_subcommand("simulate", "trace-driven policy evaluation");
  AddParamFlags(simulate_cmd, simulate.params);
  simulate_cmd->add_option("--traces", simulate.traces, "trace file")->required();
  simulate_cmd->add_option("--mode", simulate.mode, "compare | flat | replay")
      ->check(CLI::IsMember({"compare", "flat", "replay"}))
      ->capture_default_str();
  simulate_cmd->add_option("--replications", simulate.replications, "rotated-phase replays per shift")
      ->capture_default_str();
  simulate_cmd->add_option("--s", simulate.s, "threshold for replay mode");
  simulate_cmd->add_flag("--mask", simulate.mask, "replay the location mask policy");
  add_global(simulate_cmd);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen-traces", "synthetic contact traces");
  gen_cmd->add_option("--shifts", gen.corpus.shifts)->capture_default_str();
  gen_cmd->add_option("--runs", gen.corpus.runs_per_shift, "runs per shift")->capture_default_str();
  gen_cmd->add_option("--min-run", gen.corpus.min_run_slots)->capture_default_str();
  gen_cmd->add_option("--max-run", gen.corpus.max_run_slots)->capture_default_str();
  gen_cmd->add_option("--run-decay", gen.corpus.run_length_decay, "weight ratio between run lengths k+1 and k")
      ->capture_default_str();
  gen_cmd->add_option("--stop-p", gen.corpus.stop_contact_probability, "contact probability at stops")
      ->capture_default_str();
  gen_cmd->add_option("--iid", gen.iid_p, "emit one i.i.d. trace with this p instead");
  gen_cmd->add_option("--slots", gen.slots, "length of the i.i.d. trace")->capture_default_str();
  add_global(gen_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*solve_cmd) return RunSolve(solve, global, out);
    if (*sweep_cmd) return RunSweep(sweep, global, out);
    if (*publisher_cmd) return RunPublisher(publisher, global, out);
    if (*learn_cmd) return RunLearn(learn, global, out);
    if (*simulate_cmd) return RunSimulate(simulate, global, out);
    if (*gen_cmd) return RunGenTraces(gen, global, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInput;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kInput;
  } catch (const TraceParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInput;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kInput;
  }
  return kUsage;
}

}  // namespace agectl::cli
