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
#include "repnet/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <system_error>

#include "repnet/error.hpp"

namespace repnet {

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot write '" + tmp.string() + "'");
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out) throw IoError("write failed for '" + tmp.string() + "'");
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw IoError("cannot move output into place at '" + path.string() + "'");
    }
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path.string() + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string format_trace(std::span<const StepRecord> records) {
    std::string out(kTraceHeader);
    out += '\n';
    for (const auto& r : records) {
        out += std::to_string(r.t);
        out += ',' + format_double(r.b_mean);
        out += ',' + format_double(r.lambda1);
        out += ',' + std::to_string(r.core_size);
        out += r.core_alive ? ",1" : ",0";
        out += ',' + std::to_string(r.departed_count);
        out += ',' + format_double(r.y_remaining);
        out += r.whole_network ? ",1\n" : ",0\n";
    }
    return out;
}

void write_trace(const std::filesystem::path& path, std::span<const StepRecord> records) {
    write_file_atomic(path, format_trace(records));
}

namespace {

std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    for (;;) {
        const auto pos = line.find(sep, start);
        fields.push_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return fields;
}

template <typename T>
T parse_number(std::string_view field, const char* name, std::size_t line) {
    T value{};
    const auto* end = field.data() + field.size();
    const auto res = std::from_chars(field.data(), end, value);
    if (res.ec != std::errc() || res.ptr != end) {
        throw ParseError(std::string("invalid ") + name + " '" + std::string(field) + "'", line);
    }
    return value;
}

double parse_real(std::string_view field, const char* name, std::size_t line) {
    if (field == "nan") return std::nan("");
    return parse_number<double>(field, name, line);
}

bool parse_flag(std::string_view field, const char* name, std::size_t line) {
    if (field == "1") return true;
    if (field == "0") return false;
    throw ParseError(std::string("invalid ") + name + " '" + std::string(field) + "' (expected 0 or 1)", line);
}

}  // namespace

SimulationTrace parse_trace(std::string_view text) {
    SimulationTrace trace;
    if (text.empty()) throw ParseError("empty trace file", 1);
    if (text.back() != '\n') {
        std::size_t lines = 1;
        for (char c : text) lines += c == '\n';
        throw ParseError("truncated trace: last line is not newline-terminated", lines);
    }
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start < text.size()) {
        const auto end = text.find('\n', start);
        auto line = text.substr(start, end - start);
        start = end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line_no == 1) {
            if (line != kTraceHeader) throw ParseError("unexpected header '" + std::string(line) + "'", 1);
            continue;
        }
        const auto f = split(line, ',');
        if (f.size() != 8) {
            throw ParseError("expected 8 fields, found " + std::to_string(f.size()), line_no);
        }
        StepRecord r;
        r.t = parse_number<std::size_t>(f[0], "t", line_no);
        r.b_mean = parse_real(f[1], "b_mean", line_no);
        r.lambda1 = parse_real(f[2], "lambda1", line_no);
        r.core_size = parse_number<std::size_t>(f[3], "core_size", line_no);
        r.core_alive = parse_flag(f[4], "core_alive", line_no);
        r.departed_count = parse_number<std::size_t>(f[5], "departed", line_no);
        r.y_remaining = parse_real(f[6], "y_remaining", line_no);
        r.whole_network = parse_flag(f[7], "whole_network", line_no);
        if (!trace.records.empty() && r.t <= trace.records.back().t) {
            throw ParseError("records out of time order", line_no);
        }
        trace.records.push_back(r);
    }
    return trace;
}

SimulationTrace replay(const std::filesystem::path& path) {
    return parse_trace(read_file(path));
}

DirectedNetwork parse_adjacency_matrix(std::string_view text) {
    std::vector<std::vector<std::uint8_t>> rows;
    std::vector<std::size_t> row_lines;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        auto line = text.substr(start, end - start);
        start = end + 1;
        ++line_no;
        std::vector<std::uint8_t> row;
        std::size_t i = 0;
        bool comment = false;
        while (i < line.size()) {
            const char c = line[i];
            if (c == ' ' || c == '\t' || c == ',' || c == '\r') {
                ++i;
                continue;
            }
            if (c == '#' && row.empty()) {
                comment = true;
                break;
            }
            std::size_t j = i;
            while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != ',' && line[j] != '\r') ++j;
            const auto tok = line.substr(i, j - i);
            if (tok != "0" && tok != "1") {
                throw ParseError("cell (" + std::to_string(rows.size()) + ", " + std::to_string(row.size()) +
                                     ") is '" + std::string(tok) + "', expected 0 or 1",
                                 line_no);
            }
            row.push_back(tok == "1" ? 1 : 0);
            i = j;
        }
        if (comment || row.empty()) continue;
        rows.push_back(std::move(row));
        row_lines.push_back(line_no);
    }
    const std::size_t n = rows.size();
    if (n == 0) throw ParseError("matrix file contains no rows", 0);
    std::vector<std::uint8_t> a;
    a.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) {
            throw ParseError("row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                                 " entries; matrix is not square (" + std::to_string(n) + " rows)",
                             row_lines[i]);
        }
        if (rows[i][i] != 0) {
            throw ParseError("cell (" + std::to_string(i) + ", " + std::to_string(i) +
                                 ") is a self-loop; the diagonal must be 0",
                             row_lines[i]);
        }
        a.insert(a.end(), rows[i].begin(), rows[i].end());
    }
    return DirectedNetwork::from_adjacency(n, a);
}

}  // namespace repnet
