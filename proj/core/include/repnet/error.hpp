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

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace repnet {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid arguments or inputs that violate an operation's preconditions.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// A numeric argument lies outside the domain where a formula is defined.
class DomainError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// Exact cycle enumeration was requested on a network above the size guard.
class TooLargeError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// Malformed input file. Carries the 1-based line number of the offending line
/// (0 when the problem is not tied to a line, e.g. an unterminated file).
class ParseError : public ValidationError {
public:
    ParseError(const std::string& what, std::size_t line)
        : ValidationError(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Aggregated configuration problems; every violation is listed, not just the first.
class ConfigError : public ValidationError {
public:
    explicit ConfigError(std::vector<std::string> problems)
        : ValidationError(join(problems)), problems_(std::move(problems)) {}

    const std::vector<std::string>& problems() const noexcept { return problems_; }

private:
    static std::string join(const std::vector<std::string>& problems) {
        std::string out = "invalid configuration:";
        for (const auto& p : problems) out += "\n  - " + p;
        return out;
    }

    std::vector<std::string> problems_;
};

/// Failure while reading or writing files (unwritable output directory, ...).
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace repnet
