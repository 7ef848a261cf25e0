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

// Contact-opportunity traces: one line per shift, "id bits [mask]".

#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace agectl {

struct ContactTrace {
  std::string shift_id;
  std::vector<std::uint8_t> slots;  // 1 = useful contact in that slot
  std::optional<std::vector<std::uint8_t>> mask;

  std::size_t size() const { return slots.size(); }
  bool has_mask() const { return mask.has_value(); }
};

class TraceParseError : public std::runtime_error {
 public:
  TraceParseError(const std::string& what, int line);
  int line() const { return line_; }

 private:
  int line_;
};

// Blank lines and lines starting with '#' are skipped but still counted.
std::vector<ContactTrace> ParseTraces(std::istream& in);
std::vector<ContactTrace> LoadTraceFile(const std::filesystem::path& path);
void WriteTraces(std::ostream& out, const std::vector<ContactTrace>& traces);

// Fraction of useful slots. Zero for an all-zero trace.
double EstimateP(const ContactTrace& trace);

struct ConsecutiveStats {
  std::optional<double> none_after_none;     // P(e_{t+1}=0 | e_t=0)
  std::optional<double> none_after_contact;  // P(e_{t+1}=0 | e_t=1)
};

ConsecutiveStats ConsecutiveSlotStats(const ContactTrace& trace);

}  // namespace agectl
