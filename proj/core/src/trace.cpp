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

#include "agectl/trace.hpp"

#include <fstream>
#include <sstream>

namespace agectl {
namespace {

std::vector<std::uint8_t> ParseBits(const std::string& field, const char* what, int line) {
  std::vector<std::uint8_t> bits;
  bits.reserve(field.size());
  for (char c : field) {
    if (c != '0' && c != '1') {
      throw TraceParseError(std::string("invalid character '") + c + "' in " + what, line);
    }
    bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return bits;
}

}  // namespace

TraceParseError::TraceParseError(const std::string& what, int line)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

std::vector<ContactTrace> ParseTraces(std::istream& in) {
  std::vector<ContactTrace> out;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::istringstream fields(raw);
    std::string id;
    if (!(fields >> id) || id.front() == '#') continue;
    std::string bits;
    if (!(fields >> bits)) throw TraceParseError("empty contact string for '" + id + "'", line);
    ContactTrace trace;
    trace.shift_id = id;
    trace.slots = ParseBits(bits, "contact string", line);
    std::string mask;
    if (fields >> mask) {
      trace.mask = ParseBits(mask, "mask", line);
      if (trace.mask->size() != trace.slots.size()) {
        throw TraceParseError("mask length " + std::to_string(trace.mask->size()) +
                                  " does not match contact string length " +
                                  std::to_string(trace.slots.size()),
                              line);
      }
    }
    std::string extra;
    if (fields >> extra) throw TraceParseError("unexpected field '" + extra + "'", line);
    out.push_back(std::move(trace));
  }
  return out;
}

std::vector<ContactTrace> LoadTraceFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open trace file " + path.string());
  return ParseTraces(in);
}

void WriteTraces(std::ostream& out, const std::vector<ContactTrace>& traces) {
  for (const auto& t : traces) {
    out << t.shift_id << ' ';
    for (auto b : t.slots) out << static_cast<char>('0' + b);
    if (t.mask) {
      out << ' ';
      for (auto b : *t.mask) out << static_cast<char>('0' + b);
    }
    out << '\n';
  }
}

double EstimateP(const ContactTrace& trace) {
  if (trace.slots.empty()) return 0.0;
  std::size_t useful = 0;
  for (auto b : trace.slots) useful += b;
  return static_cast<double>(useful) / static_cast<double>(trace.slots.size());
}

ConsecutiveStats ConsecutiveSlotStats(const ContactTrace& trace) {
  std::size_t after_none = 0, none_none = 0, after_contact = 0, none_contact = 0;
  for (std::size_t i = 0; i + 1 < trace.slots.size(); ++i) {
    const bool next_none = trace.slots[i + 1] == 0;
    if (trace.slots[i] == 0) {
      ++after_none;
      none_none += next_none;
    } else {
      ++after_contact;
      none_contact += next_none;
    }
  }
  ConsecutiveStats out;
  if (after_none) out.none_after_none = static_cast<double>(none_none) / static_cast<double>(after_none);
  if (after_contact) {
    out.none_after_contact = static_cast<double>(none_contact) / static_cast<double>(after_contact);
  }
  return out;
}

}  // namespace agectl
