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

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "repnet/dynamics.hpp"
#include "repnet/reputation.hpp"

namespace repnet {

/// Link density, tagged with how the number is meant: a per-pair probability
/// p, or an average number of links per user m = p (N - 1).
struct Density {
    enum class Kind { Probability, LinksPerUser };
    Kind kind = Kind::Probability;
    double value = 0.0;

    double probability(std::size_t n) const;
    double links_per_user(std::size_t n) const;
    RewireModel model(std::size_t n) const;
};

std::string_view to_string(Density::Kind kind);

struct ExperimentConfig {
    std::size_t n = 100;
    std::optional<Density> density;
    std::vector<double> tau_values;
    std::size_t t_max = 10000;
    std::size_t runs = 50;
    std::uint64_t seed = 0;
    SolverConfig solver;
    std::size_t sample_every = 10;
    bool filter_whole = true;
    bool force_min_exit = true;
    /// Steps excluded from the time-averaged benefit; unset means t_max / 10.
    std::optional<std::size_t> burn_in;
    std::size_t workers = 1;

    std::size_t effective_burn_in() const { return burn_in ? *burn_in : t_max / 10; }

    /// Every violated constraint, empty when the configuration is usable.
    std::vector<std::string> problems() const;

    /// Throws ConfigError listing problems() when not empty.
    void validate() const;
};

/// Parses a YAML configuration document. Unknown keys are rejected.
/// Throws ConfigError (semantic problems) or ParseError (syntax, with line).
ExperimentConfig parse_config(std::string_view text);

/// Reads and parses a configuration file; a missing file is a ConfigError.
ExperimentConfig load_config(const std::filesystem::path& path);

/// Worker count after applying the REPNET_WORKERS environment override.
std::size_t resolve_workers(std::size_t configured);

}  // namespace repnet
