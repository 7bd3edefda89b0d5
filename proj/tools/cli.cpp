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
#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "repnet/config.hpp"
#include "repnet/error.hpp"
#include "repnet/experiment.hpp"
#include "repnet/graph.hpp"
#include "repnet/io.hpp"
#include "repnet/reputation.hpp"
#include "repnet/snapshot.hpp"

namespace repnet::cli {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

// Flags shared by simulate and sweep; every one overrides the config file.
struct RunFlags {
    std::string config;
    std::string out;
    std::optional<std::uint64_t> seed;
    std::optional<double> tau;
    std::optional<double> p;
    std::optional<double> m;
    std::optional<std::size_t> n;
    std::optional<std::size_t> t_max;
    std::optional<std::size_t> runs;
    std::optional<std::size_t> sample_every;
    std::optional<std::size_t> workers;
    bool json = false;
};

void add_run_flags(CLI::App* cmd, RunFlags& f, bool sweep) {
    cmd->add_option("--config", f.config, "YAML experiment configuration file")->check(CLI::ExistingFile);
    cmd->add_option("--out", f.out,
                    sweep ? "output directory for the CSV files" : "trace CSV path (a directory gets trace.csv)");
    cmd->add_option("--seed", f.seed, "64-bit master seed; all randomness derives from it");
    cmd->add_option("--tau", f.tau, sweep ? "run a single cost value instead of tau_values" : "cost level tau in [0, 1)");
    auto* p = cmd->add_option("--p", f.p, "per-pair link probability for newcomers");
    auto* m = cmd->add_option("--m", f.m, "average links per user, m = p (n - 1)");
    p->excludes(m);
    m->excludes(p);
    cmd->add_option("--n", f.n, "number of user slots");
    cmd->add_option("--t-max", f.t_max, "network time steps per run");
    if (sweep) cmd->add_option("--runs", f.runs, "independent runs per cost value");
    cmd->add_option("--sample-every", f.sample_every,
                    sweep ? "sampling period for histograms and snapshots" : "trace every k-th step (default 1)");
    if (sweep) cmd->add_option("--workers", f.workers, "worker threads (REPNET_WORKERS overrides)");
    cmd->add_flag("--json", f.json, "machine-readable JSON on stdout");
}

ExperimentConfig build_config(const RunFlags& f, bool sweep) {
    ExperimentConfig cfg;
    if (!f.config.empty()) {
        cfg = load_config(f.config);
    } else {
        cfg.tau_values = {0.0};
        if (!sweep) cfg.sample_every = 1;
    }
    if (f.n) cfg.n = *f.n;
    if (f.p) cfg.density = Density{Density::Kind::Probability, *f.p};
    if (f.m) cfg.density = Density{Density::Kind::LinksPerUser, *f.m};
    if (f.seed) cfg.seed = *f.seed;
    if (f.tau) cfg.tau_values = {*f.tau};
    if (f.t_max) {
        cfg.t_max = *f.t_max;
        if (cfg.burn_in && *cfg.burn_in >= cfg.t_max) cfg.burn_in.reset();
    }
    if (f.runs) cfg.runs = *f.runs;
    if (f.sample_every) cfg.sample_every = *f.sample_every;
    if (f.workers) cfg.workers = *f.workers;
    cfg.validate();
    return cfg;
}

json robustness_json(const RobustnessSummary& r) {
    json j;
    j["lifetimes"] = r.lifetimes;
    j["recoveries"] = r.recoveries;
    j["mean_lifetime"] = r.mean_lifetime;
    j["mean_recovery"] = r.mean_recovery;
    j["mean_rewired_fraction"] = r.mean_rewired_fraction;
    j["censored_length"] = r.censored_length;
    return j;
}

int cmd_simulate(const RunFlags& f, std::ostream& out) {
    auto cfg = build_config(f, false);
    if (cfg.tau_values.size() != 1) {
        throw ValidationError("simulate runs one cost level; pass --tau to pick one of tau_values");
    }
    fs::path trace_path;
    if (!f.out.empty()) {
        trace_path = f.out;
        if (fs::is_directory(trace_path) || f.out.back() == '/') trace_path /= "trace.csv";
    }

    std::vector<StepRecord> trace;
    const auto summary = simulate_run(cfg, 0, 0, [&](const StepRecord& r) {
        if (r.t % cfg.sample_every == 0 || r.t + 1 == cfg.t_max) trace.push_back(r);
    });
    if (!trace_path.empty()) {
        if (trace_path.has_parent_path()) fs::create_directories(trace_path.parent_path());
        write_trace(trace_path, trace);
    }

    if (f.json) {
        json j;
        j["seed"] = summary.seed;
        j["tau"] = cfg.tau_values.front();
        j["n"] = cfg.n;
        j["p"] = cfg.density->probability(cfg.n);
        j["m"] = cfg.density->links_per_user(cfg.n);
        j["t_max"] = cfg.t_max;
        j["mean_b_final"] = summary.final_record.b_mean;
        j["mean_b_time"] = summary.b_time_average;
        j["robustness"] = robustness_json(summary.robustness);
        j["unconverged_steps"] = summary.unconverged_steps;
        j["trace"] = trace_path.string();
        out << j.dump(2) << '\n';
    } else {
        out << "seed " << summary.seed << ", tau " << cfg.tau_values.front() << ", n " << cfg.n << ", p "
            << cfg.density->probability(cfg.n) << ", t_max " << cfg.t_max << '\n';
        out << "final <b> " << summary.final_record.b_mean << ", time-averaged <b> " << summary.b_time_average << '\n';
        out << "core lifetimes " << summary.robustness.lifetimes.size() << " (mean "
            << summary.robustness.mean_lifetime << "), recoveries " << summary.robustness.recoveries.size()
            << " (mean " << summary.robustness.mean_recovery << ")\n";
        if (!trace_path.empty()) out << "trace written to " << trace_path.string() << '\n';
    }
    return kExitOk;
}

int cmd_sweep(const RunFlags& f, std::ostream& out) {
    if (f.config.empty() && !(f.p || f.m)) {
        throw ValidationError("sweep needs --config or an explicit density (--p or --m)");
    }
    const auto cfg = build_config(f, true);
    const fs::path dir = f.out.empty() ? fs::path("sweep-out") : fs::path(f.out);
    const auto result = run_experiment(cfg);
    write_sweep_outputs(result, dir);

    if (f.json) {
        json arr = json::array();
        for (const auto& s : result.per_tau) {
            json j;
            j["tau"] = s.tau;
            j["mean_b_final"] = s.b_final.mean;
            j["se_b_final"] = s.b_final.se;
            j["mean_b_time"] = s.b_time.mean;
            j["se_b_time"] = s.b_time.se;
            j["robustness"] = robustness_json(s.robustness);
            j["mean_core_size"] = s.core_size.mean;
            j["mean_max_out_degree"] = s.max_out_degree.mean;
            j["unconverged_steps"] = s.unconverged_steps;
            arr.push_back(std::move(j));
        }
        json doc;
        doc["out"] = dir.string();
        doc["per_tau"] = std::move(arr);
        out << doc.dump(2) << '\n';
    } else {
        out << std::setw(8) << "tau" << std::setw(12) << "<b>_time" << std::setw(12) << "<b>_final"
            << std::setw(12) << "<Omega_Q>" << std::setw(12) << "<Pi_Q>" << std::setw(12) << "rewired" << '\n';
        for (const auto& s : result.per_tau) {
            out << std::setw(8) << s.tau << std::setw(12) << s.b_time.mean << std::setw(12) << s.b_final.mean
                << std::setw(12) << s.robustness.mean_lifetime << std::setw(12) << s.robustness.mean_recovery
                << std::setw(12) << s.robustness.mean_rewired_fraction << '\n';
        }
        out << "outputs written to " << dir.string() << '\n';
    }
    return kExitOk;
}

struct AnalyzeFlags {
    std::string path;
    double tolerance = 1e-9;
    std::size_t max_iterations = 0;
    std::size_t cycle_max_nodes = kDefaultCycleMaxNodes;
    std::size_t cycle_budget = kDefaultCycleBudget;
    bool json = false;
};

std::string id_list(const std::vector<NodeId>& ids) {
    std::string s = "{";
    for (std::size_t i = 0; i < ids.size(); ++i) s += (i ? "," : "") + std::to_string(ids[i]);
    return s + "}";
}

int cmd_analyze(const AnalyzeFlags& f, std::ostream& out) {
    const auto net = parse_adjacency_matrix(read_file(f.path));
    SolverConfig solver;
    solver.tolerance = f.tolerance;
    solver.max_iterations = f.max_iterations;
    const auto eq = equilibrium(net, solver);
    const auto analysis = compute_sccs(net);
    std::optional<CycleReport> cycles;
    std::string cycle_error;
    try {
        cycles = enumerate_cycles(net, f.cycle_max_nodes, f.cycle_budget);
    } catch (const TooLargeError& e) {
        cycle_error = e.what();
    }

    if (f.json) {
        json j;
        j["n"] = net.size();
        j["edges"] = net.edge_count();
        j["lambda1"] = eq.lambda1;
        j["b"] = eq.b;
        j["x"] = eq.x;
        j["z"] = eq.z;
        j["converged"] = eq.converged;
        j["iterations"] = eq.iterations;
        j["residual"] = eq.residual;
        j["acyclic"] = eq.acyclic;
        j["sccs"] = analysis.sccs;
        j["core"] = analysis.core;
        j["periphery"] = analysis.periphery(net.size());
        j["core_alive"] = analysis.is_core_alive;
        j["whole_network"] = analysis.whole_network_component;
        if (cycles) {
            json c;
            c["count"] = cycles->cycles.size();
            json by_len = json::object();
            for (const auto& [len, count] : cycles->count_by_length) by_len[std::to_string(len)] = count;
            c["by_length"] = std::move(by_len);
            c["truncated"] = cycles->truncated;
            c["list"] = cycles->cycles;
            j["cycles"] = std::move(c);
        } else {
            j["cycles"] = nullptr;
            j["cycles_error"] = cycle_error;
        }
        out << j.dump(2) << '\n';
        return kExitOk;
    }

    out << std::setprecision(6);
    out << "n = " << net.size() << ", edges = " << net.edge_count() << " (ids are 0-based)\n";
    out << "lambda1 = " << eq.lambda1 << (eq.converged ? "" : "  [not converged]") << '\n';
    out << "b = (";
    for (std::size_t i = 0; i < eq.b.size(); ++i) out << (i ? ", " : "") << eq.b[i];
    out << ")\nx = (";
    for (std::size_t i = 0; i < eq.x.size(); ++i) out << (i ? ", " : "") << eq.x[i];
    out << ")\nSCCs:";
    for (const auto& c : analysis.sccs) out << ' ' << id_list(c);
    out << "\ncore = " << (analysis.is_core_alive ? id_list(analysis.core) : std::string("none"))
        << ", periphery = " << id_list(analysis.periphery(net.size())) << '\n';
    if (cycles) {
        out << "cycles: " << cycles->cycles.size() << (cycles->truncated ? " (truncated)" : "") << '\n';
        for (const auto& [len, count] : cycles->count_by_length) out << "  length " << len << ": " << count << '\n';
        for (const auto& c : cycles->cycles) {
            out << "  ";
            for (NodeId v : c) out << v << " -> ";
            out << c.front() << '\n';
        }
    } else {
        out << "cycles: " << cycle_error << '\n';
    }
    return kExitOk;
}

struct ChainFlags {
    double b = 0.0;
    double tau = 0.0;
    double lambda1 = 0.0;
    bool json = false;
};

int cmd_chain_bound(const ChainFlags& f, std::ostream& out) {
    const auto n = chain_length_bound(f.b, f.tau, f.lambda1);
    if (f.json) {
        json j;
        j["b_anchor"] = f.b;
        j["tau"] = f.tau;
        j["lambda1"] = f.lambda1;
        j["n"] = n;
        out << j.dump(2) << '\n';
    } else {
        out << n << '\n';
    }
    return kExitOk;
}

struct ExportFlags {
    std::string in;
    std::string out;
    std::string format = "dot";
};

int cmd_export(const ExportFlags& f, std::ostream& out) {
    const auto format = parse_snapshot_format(f.format);
    const auto text = read_file(f.in);
    const auto first = text.find_first_not_of(" \t\r\n");
    const bool is_json = first != std::string::npos && text[first] == '{';
    const auto net = is_json ? import_snapshot_json(text) : parse_adjacency_matrix(text);
    const auto analysis = compute_sccs(net);
    const auto eq = net.size() ? equilibrium(net) : EquilibriumResult{};
    const auto doc = export_snapshot(net, analysis, eq, format);
    if (f.out.empty()) {
        out << doc;
    } else {
        write_file_atomic(f.out, doc);
    }
    return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"repnet: reputation networks with cost-driven entry and exit"};
    app.require_subcommand(1, 1);

    RunFlags sim_flags, sweep_flags;
    auto* simulate = app.add_subcommand("simulate", "simulate one run and write its step trace as CSV");
    add_run_flags(simulate, sim_flags, false);
    auto* sweep = app.add_subcommand("sweep", "run an experiment over cost values and write summary CSVs");
    add_run_flags(sweep, sweep_flags, true);

    AnalyzeFlags analyze_flags;
    auto* analyze = app.add_subcommand("analyze", "equilibrium, SCCs and cycles of an adjacency matrix file");
    analyze->add_option("matrix", analyze_flags.path, "0/1 matrix file; row i lists a_ij over followers j")
        ->required()
        ->check(CLI::ExistingFile);
    analyze->add_option("--tolerance", analyze_flags.tolerance, "solver convergence threshold")
        ->check(CLI::PositiveNumber);
    analyze->add_option("--max-iterations", analyze_flags.max_iterations, "solver iteration cap (0 = 100 n + 1000)");
    analyze->add_option("--cycle-max-nodes", analyze_flags.cycle_max_nodes, "size guard for cycle enumeration");
    analyze->add_option("--cycle-budget", analyze_flags.cycle_budget, "maximum number of cycles to list");
    analyze->add_flag("--json", analyze_flags.json, "machine-readable JSON on stdout");

    ChainFlags chain_flags;
    auto* chain = app.add_subcommand("chain-bound", "longest sustainable simple chain below a core user");
    chain->add_option("--b", chain_flags.b, "relative reputation of the anchoring core user")->required();
    chain->add_option("--tau", chain_flags.tau, "cost level")->required();
    chain->add_option("--lambda1", chain_flags.lambda1, "largest eigenvalue of the network")->required();
    chain->add_flag("--json", chain_flags.json, "machine-readable JSON on stdout");

    ExportFlags export_flags;
    auto* exporter = app.add_subcommand("export", "convert a matrix or JSON snapshot into DOT or JSON");
    exporter->add_option("--in", export_flags.in, "matrix file or JSON snapshot")
        ->required()
        ->check(CLI::ExistingFile);
    exporter->add_option("--format", export_flags.format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
    exporter->add_option("--out", export_flags.out, "output file (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitValidation;
    }

    try {
        if (*simulate) return cmd_simulate(sim_flags, out);
        if (*sweep) return cmd_sweep(sweep_flags, out);
        if (*analyze) return cmd_analyze(analyze_flags, out);
        if (*chain) return cmd_chain_bound(chain_flags, out);
        if (*exporter) return cmd_export(export_flags, out);
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
    return kExitValidation;
}

}  // namespace repnet::cli
