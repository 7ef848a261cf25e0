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

#pragma once

#include <filesystem>
#include <istream>
#include <map>
#include <stdexcept>
#include <string>

#include "agectl/model.hpp"

namespace agectl {

// Flat "key = value" configuration. Lines starting with '#' are comments.
//
// Recognized keys: p, M, G, P, P3G, B, utility.form (linear | step | tabular),
// utility.v, utility.k, utility.values (comma separated, tabular only).
// P3G = inf marks 3G as unavailable.
using KeyValueConfig = std::map<std::string, std::string>;

class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& what, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

KeyValueConfig ParseKeyValueConfig(std::istream& in);
KeyValueConfig LoadKeyValueConfig(const std::filesystem::path& path);

// Builds validated parameters, normalizing the utility so that U(M) = 0.
// Missing keys keep SystemParams defaults; unknown keys are rejected.
SystemParams ParamsFromConfig(const KeyValueConfig& config);

// Inverse of ParamsFromConfig for the three named utility forms.
KeyValueConfig ConfigFromParams(const SystemParams& params);

// Single-line rendering used in output headers, e.g.
// "p=0.54 M=12 G=0.99 P=0 P3G=inf B=0 utility=linear(M=12)".
std::string FormatParams(const SystemParams& params);

// Parses a double, accepting "inf" / "+inf".
double ParseNumber(const std::string& text, const std::string& key);

}  // namespace agectl
