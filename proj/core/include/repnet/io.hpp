// Copyright 2026 The repnet Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "repnet/metrics.hpp"
#include "repnet/network.hpp"

namespace repnet {

/// Shortest decimal text that parses back to the same double ("nan" for NaN).
std::string format_double(double v);

/// Writes `content` to a sibling temporary file and renames it over `path`.
/// Throws IoError on failure.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

std::string read_file(const std::filesystem::path& path);

inline constexpr std::string_view kTraceHeader =
    "t,b_mean,lambda1,core_size,core_alive,departed,y_remaining,whole_network";

struct SimulationTrace {
    std::vector<StepRecord> records;
};

/// Step records as CSV under kTraceHeader, booleans written as 0/1.
std::string format_trace(std::span<const StepRecord> records);
void write_trace(const std::filesystem::path& path, std::span<const StepRecord> records);

/// Strict CSV parse: exact header, eight fields per line, every line
/// newline-terminated. Throws ParseError with the offending line number.
SimulationTrace parse_trace(std::string_view text);

/// Loads a persisted trace for re-aggregation.
SimulationTrace replay(const std::filesystem::path& path);

/// Parses a square 0/1 matrix whose row i lists a_ij over followers j.
/// Entries are separated by whitespace and/or commas; blank lines and lines
/// starting with '#' are skipped. Throws ParseError naming the offending cell
/// for non-square input, non-binary entries or a non-zero diagonal.
DirectedNetwork parse_adjacency_matrix(std::string_view text);

}  // namespace repnet
