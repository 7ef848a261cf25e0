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

#include "agectl/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace agectl {
namespace {

std::string Trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

int ParseInt(const std::string& text, const std::string& key) {
  int value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) throw ConfigError("key '" + key + "': not an integer: " + text);
  return value;
}

std::string FormatNumber(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

const std::set<std::string>& KnownKeys() {
  static const std::set<std::string> keys = {
      "p", "M", "G", "P", "P3G", "B", "utility.form", "utility.v", "utility.k", "utility.values"};
  return keys;
}

}  // namespace

double ParseNumber(const std::string& text, const std::string& key) {
  const std::string t = Trim(text);
  if (t == "inf" || t == "+inf" || t == "infinity") return std::numeric_limits<double>::infinity();
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(t, &used);
  } catch (const std::exception&) {
    throw ConfigError("key '" + key + "': not a number: " + text);
  }
  if (used != t.size()) throw ConfigError("key '" + key + "': not a number: " + text);
  return value;
}

KeyValueConfig ParseKeyValueConfig(std::istream& in) {
  KeyValueConfig out;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const std::string t = Trim(line);
    if (t.empty() || t.front() == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) throw ConfigError("expected key = value", number);
    const std::string key = Trim(t.substr(0, eq));
    const std::string value = Trim(t.substr(eq + 1));
    if (key.empty()) throw ConfigError("empty key", number);
    if (!KnownKeys().contains(key)) throw ConfigError("unknown key '" + key + "'", number);
    if (out.contains(key)) throw ConfigError("duplicate key '" + key + "'", number);
    out[key] = value;
  }
  return out;
}

KeyValueConfig LoadKeyValueConfig(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  return ParseKeyValueConfig(in);
}

SystemParams ParamsFromConfig(const KeyValueConfig& config) {
  for (const auto& [key, value] : config) {
    if (!KnownKeys().contains(key)) throw ConfigError("unknown key '" + key + "'");
  }
  auto get = [&](const std::string& key) -> const std::string* {
    auto it = config.find(key);
    return it == config.end() ? nullptr : &it->second;
  };

  SystemParams params;
  if (auto v = get("p")) params.p = ParseNumber(*v, "p");
  if (auto v = get("M")) params.M = ParseInt(*v, "M");
  if (auto v = get("G")) params.G = ParseNumber(*v, "G");
  if (auto v = get("P")) params.P = ParseNumber(*v, "P");
  if (auto v = get("B")) params.B = ParseNumber(*v, "B");
  if (auto v = get("P3G")) {
    const double p3g = ParseNumber(*v, "P3G");
    if (std::isinf(p3g) && p3g > 0) {
      params.P3G.reset();
    } else {
      params.P3G = p3g;
    }
  }

  const std::string form = get("utility.form") ? *get("utility.form") : "linear";
  UtilityFunction u = UtilityFunction::MakeLinear(params.M);
  try {
    if (form == "linear") {
      u = UtilityFunction::MakeLinear(params.M);
    } else if (form == "step") {
      if (!get("utility.v") || !get("utility.k")) {
        throw ConfigError("step utility needs utility.v and utility.k");
      }
      u = UtilityFunction::MakeStep(ParseNumber(*get("utility.v"), "utility.v"),
                                    ParseInt(*get("utility.k"), "utility.k"));
    } else if (form == "tabular") {
      if (!get("utility.values")) throw ConfigError("tabular utility needs utility.values");
      std::vector<double> values;
      std::stringstream ss(*get("utility.values"));
      std::string item;
      while (std::getline(ss, item, ',')) values.push_back(ParseNumber(item, "utility.values"));
      if (static_cast<int>(values.size()) < params.M) {
        throw ConfigError("utility.values must list at least M values");
      }
      u = UtilityFunction::MakeTabular(std::move(values));
    } else {
      throw ConfigError("unknown utility.form '" + form + "'");
    }
    params.utility = NormalizeUtility(u, params.M);
    params.Validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  } catch (const std::out_of_range& e) {
    throw ConfigError(e.what());
  }
  return params;
}

KeyValueConfig ConfigFromParams(const SystemParams& params) {
  KeyValueConfig out;
  out["p"] = FormatNumber(params.p);
  out["M"] = std::to_string(params.M);
  out["G"] = FormatNumber(params.G);
  out["P"] = FormatNumber(params.P);
  out["P3G"] = params.P3G ? FormatNumber(*params.P3G) : "inf";
  out["B"] = FormatNumber(params.B);
  const auto& form = params.utility.form();
  if (std::holds_alternative<UtilityFunction::Linear>(form)) {
    out["utility.form"] = "linear";
  } else if (auto* step = std::get_if<UtilityFunction::Step>(&form)) {
    out["utility.form"] = "step";
    out["utility.v"] = FormatNumber(step->v);
    out["utility.k"] = std::to_string(step->k);
  } else {
    const auto& table = std::get<UtilityFunction::Tabular>(form);
    out["utility.form"] = "tabular";
    std::string joined;
    for (std::size_t i = 0; i < table.values.size(); ++i) {
      joined += (i ? "," : "") + FormatNumber(table.values[i]);
    }
    out["utility.values"] = joined;
  }
  return out;
}

std::string FormatParams(const SystemParams& params) {
  std::ostringstream os;
  os << "p=" << FormatNumber(params.p) << " M=" << params.M << " G=" << FormatNumber(params.G)
     << " P=" << FormatNumber(params.P) << " P3G=" << (params.P3G ? FormatNumber(*params.P3G) : "inf")
     << " B=" << FormatNumber(params.B) << " utility=" << params.utility.Describe();
  return os.str();
}

}  // namespace agectl
