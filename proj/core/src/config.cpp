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
#include "repnet/config.hpp"

#include <yaml-cpp/yaml.h>

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "repnet/error.hpp"
#include "repnet/io.hpp"

namespace repnet {

double Density::probability(std::size_t n) const {
    if (kind == Kind::Probability) return value;
    return n > 1 ? value / static_cast<double>(n - 1) : 0.0;
}

double Density::links_per_user(std::size_t n) const {
    if (kind == Kind::LinksPerUser) return value;
    return value * static_cast<double>(n > 0 ? n - 1 : 0);
}

RewireModel Density::model(std::size_t n) const {
    return kind == Kind::Probability ? RewireModel::from_probability(value)
                                     : RewireModel::from_links_per_user(value, n);
}

std::string_view to_string(Density::Kind kind) {
    return kind == Density::Kind::Probability ? "probability" : "links_per_user";
}

std::vector<std::string> ExperimentConfig::problems() const {
    std::vector<std::string> out;
    if (n < 2) out.push_back("n must be >= 2");
    if (!density) {
        out.push_back("density is required together with density_kind (probability | links_per_user)");
    } else if (density->kind == Density::Kind::Probability) {
        if (!(density->value >= 0.0 && density->value <= 1.0)) out.push_back("density (probability) must lie in [0, 1]");
    } else {
        if (!(density->value >= 0.0)) out.push_back("density (links_per_user) must be >= 0");
        if (n >= 2 && density->value > static_cast<double>(n - 1)) out.push_back("density (links_per_user) exceeds n - 1");
    }
    if (tau_values.empty()) out.push_back("tau_values must not be empty");
    for (double tau : tau_values) {
        if (!(tau >= 0.0 && tau < 1.0)) out.push_back("tau_values entry " + format_double(tau) + " outside [0, 1)");
    }
    if (t_max < 1) out.push_back("t_max must be >= 1");
    if (runs < 1) out.push_back("runs must be >= 1");
    if (sample_every < 1) out.push_back("sample_every must be >= 1");
    if (!(solver.tolerance > 0.0)) out.push_back("solver.tolerance must be > 0");
    if (solver.ode_dt < 0.0) out.push_back("solver.ode_dt must be >= 0");
    if (burn_in && *burn_in >= t_max) out.push_back("burn_in must be < t_max");
    if (workers < 1) out.push_back("workers must be >= 1");
    return out;
}

void ExperimentConfig::validate() const {
    auto p = problems();
    if (!p.empty()) throw ConfigError(std::move(p));
}

namespace {

template <typename T>
T scalar(const YAML::Node& node, const std::string& key, std::vector<std::string>& problems) {
    try {
        return node.as<T>();
    } catch (const YAML::Exception&) {
        problems.push_back(key + ": invalid value '" + (node.IsScalar() ? node.Scalar() : std::string("<non-scalar>")) +
                           "'");
        return T{};
    }
}

}  // namespace

ExperimentConfig parse_config(std::string_view text) {
    YAML::Node root;
    try {
        root = YAML::Load(std::string(text));
    } catch (const YAML::ParserException& e) {
        throw ParseError(e.msg, static_cast<std::size_t>(e.mark.line + 1));
    }
    if (!root.IsMap()) throw ParseError("configuration must be a key: value mapping", 0);

    static const std::set<std::string> known = {"n",           "density_kind", "density",      "tau_values",
                                                "t_max",       "runs",         "seed",         "solver",
                                                "sample_every", "filter_whole", "force_min_exit", "burn_in",
                                                "workers"};
    ExperimentConfig cfg;
    std::vector<std::string> problems;
    for (const auto& kv : root) {
        const auto key = kv.first.as<std::string>();
        if (!known.count(key)) problems.push_back("unknown key '" + key + "'");
    }

    if (root["n"]) cfg.n = scalar<std::size_t>(root["n"], "n", problems);
    const auto kind = root["density_kind"];
    const auto dens = root["density"];
    if (kind && dens) {
        const auto k = scalar<std::string>(kind, "density_kind", problems);
        Density d;
        d.value = scalar<double>(dens, "density", problems);
        if (k == "probability") {
            d.kind = Density::Kind::Probability;
            cfg.density = d;
        } else if (k == "links_per_user") {
            d.kind = Density::Kind::LinksPerUser;
            cfg.density = d;
        } else {
            problems.push_back("density_kind must be 'probability' or 'links_per_user'");
        }
    } else if (dens && !kind) {
        problems.push_back("density given without density_kind (probability | links_per_user)");
    } else if (kind && !dens) {
        problems.push_back("density_kind given without density");
    }
    if (const auto taus = root["tau_values"]) {
        if (!taus.IsSequence()) {
            problems.push_back("tau_values must be a list");
        } else {
            for (const auto& t : taus) cfg.tau_values.push_back(scalar<double>(t, "tau_values", problems));
        }
    }
    if (root["t_max"]) cfg.t_max = scalar<std::size_t>(root["t_max"], "t_max", problems);
    if (root["runs"]) cfg.runs = scalar<std::size_t>(root["runs"], "runs", problems);
    if (root["seed"]) cfg.seed = scalar<std::uint64_t>(root["seed"], "seed", problems);
    if (root["sample_every"]) cfg.sample_every = scalar<std::size_t>(root["sample_every"], "sample_every", problems);
    if (root["filter_whole"]) cfg.filter_whole = scalar<bool>(root["filter_whole"], "filter_whole", problems);
    if (root["force_min_exit"]) cfg.force_min_exit = scalar<bool>(root["force_min_exit"], "force_min_exit", problems);
    if (root["burn_in"]) cfg.burn_in = scalar<std::size_t>(root["burn_in"], "burn_in", problems);
    if (root["workers"]) cfg.workers = scalar<std::size_t>(root["workers"], "workers", problems);
    if (const auto s = root["solver"]) {
        if (!s.IsMap()) {
            problems.push_back("solver must be a mapping");
        } else {
            for (const auto& kv : s) {
                const auto key = kv.first.as<std::string>();
                if (key != "tolerance" && key != "max_iterations" && key != "mode" && key != "ode_dt" &&
                    key != "dense_fallback_max_n") {
                    problems.push_back("unknown key 'solver." + key + "'");
                }
            }
            if (s["tolerance"]) cfg.solver.tolerance = scalar<double>(s["tolerance"], "solver.tolerance", problems);
            if (s["max_iterations"]) {
                cfg.solver.max_iterations = scalar<std::size_t>(s["max_iterations"], "solver.max_iterations", problems);
            }
            if (s["ode_dt"]) cfg.solver.ode_dt = scalar<double>(s["ode_dt"], "solver.ode_dt", problems);
            if (s["dense_fallback_max_n"]) {
                cfg.solver.dense_fallback_max_n =
                    scalar<std::size_t>(s["dense_fallback_max_n"], "solver.dense_fallback_max_n", problems);
            }
            if (s["mode"]) {
                const auto m = scalar<std::string>(s["mode"], "solver.mode", problems);
                if (m == "shifted-power") {
                    cfg.solver.mode = SolverMode::ShiftedPower;
                } else if (m == "ode-integration") {
                    cfg.solver.mode = SolverMode::OdeIntegration;
                } else {
                    problems.push_back("solver.mode must be 'shifted-power' or 'ode-integration'");
                }
            }
        }
    }

    for (auto& p : cfg.problems()) problems.push_back(std::move(p));
    if (!problems.empty()) throw ConfigError(std::move(problems));
    return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError({"cannot open config file '" + path.string() + "'"});
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::size_t resolve_workers(std::size_t configured) {
    if (const char* env = std::getenv("REPNET_WORKERS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1) return static_cast<std::size_t>(v);
    }
    return configured < 1 ? 1 : configured;
}

}  // namespace repnet
