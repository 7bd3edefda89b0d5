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
#include "repnet/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "repnet/dynamics.hpp"
#include "repnet/error.hpp"
#include "repnet/graph.hpp"
#include "repnet/io.hpp"
#include "repnet/rng.hpp"

namespace repnet {

RunSummary simulate_run(const ExperimentConfig& config, std::size_t tau_index, std::size_t run,
                        const RecordSink& sink) {
    config.validate();
    const std::size_t n = config.n;
    const ExitRule rule{config.tau_values.at(tau_index), config.force_min_exit};
    const RewireModel model = config.density->model(n);
    const std::size_t burn_in = config.effective_burn_in();

    RunSummary out;
    out.tau_index = tau_index;
    out.run = run;
    out.seed = derive_seed(config.seed, tau_index, run);

    Rng rng(out.seed);
    DirectedNetwork net = random_network(n, model, rng);
    RobustnessTracker tracker;
    double b_sum = 0.0;
    std::size_t b_count = 0;

    for (std::size_t t = 0; t < config.t_max; ++t) {
        const auto eq = equilibrium(net, config.solver);
        const auto analysis = compute_sccs(net);
        const auto leavers = select_leavers(eq.b, rule, rng);

        StepRecord rec;
        rec.t = t;
        rec.b_mean = population_mean_benefit(eq.b);
        rec.lambda1 = eq.lambda1;
        rec.core_size = analysis.core_size;
        rec.core_alive = analysis.is_core_alive;
        rec.departed_count = leavers.size();
        rec.y_remaining = 1.0 - static_cast<double>(leavers.size()) / static_cast<double>(n);
        rec.whole_network = analysis.whole_network_component;

        if (!eq.converged) ++out.unconverged_steps;
        tracker.push(rec.core_alive, 1.0 - rec.y_remaining);
        if (t >= burn_in) {
            b_sum += rec.b_mean;
            ++b_count;
        }
        if (t % config.sample_every == 0 || t + 1 == config.t_max) {
            out.samples.push_back(rec);
            std::size_t max_out = 0;
            for (NodeId v = 0; v < n; ++v) max_out = std::max(max_out, net.following(v).size());
            out.sample_max_out_degree.push_back(max_out);
        }
        if (sink) sink(rec);
        out.final_record = rec;

        if (!leavers.empty()) rewire_newcomers_in_place(net, leavers, model, rng);
    }
    out.b_time_average = b_sum / static_cast<double>(b_count);
    out.robustness = tracker.finish();
    return out;
}

TauSummary summarize_tau(const ExperimentConfig& config, double tau, std::span<const RunSummary> cells) {
    TauSummary s;
    s.tau = tau;
    std::vector<double> finals, averages, max_out, core;
    std::vector<RobustnessSummary> parts;
    std::vector<RunRecord> samples;
    for (const auto& c : cells) {
        finals.push_back(c.final_record.b_mean);
        averages.push_back(c.b_time_average);
        parts.push_back(c.robustness);
        s.unconverged_steps += c.unconverged_steps;
        for (std::size_t k = 0; k < c.samples.size(); ++k) {
            samples.push_back({c.run, c.samples[k]});
            max_out.push_back(static_cast<double>(c.sample_max_out_degree[k]));
            core.push_back(static_cast<double>(c.samples[k].core_size));
        }
    }
    s.b_final = mean_se(finals);
    s.b_time = mean_se(averages);
    s.robustness = pool_robustness(parts);
    s.max_out_degree = mean_se(max_out);
    s.core_size = mean_se(core);
    try {
        s.ensemble = ensemble_average(samples, config.filter_whole);
    } catch (const ValidationError&) {
        s.ensemble.reset();
    }
    return s;
}

SweepResult run_experiment(const ExperimentConfig& config) {
    config.validate();
    SweepResult result;
    result.config = config;
    const std::size_t taus = config.tau_values.size();
    const std::size_t total = taus * config.runs;
    result.cells.resize(total);

    const std::size_t workers = std::min(resolve_workers(config.workers), total);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        for (;;) {
            const std::size_t cell = next.fetch_add(1);
            if (cell >= total) return;
            try {
                result.cells[cell] = simulate_run(config, cell / config.runs, cell % config.runs);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next = total;
                return;
            }
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    }
    if (failure) std::rethrow_exception(failure);

    for (std::size_t ti = 0; ti < taus; ++ti) {
        const std::span<const RunSummary> cells(result.cells.data() + ti * config.runs, config.runs);
        result.per_tau.push_back(summarize_tau(config, config.tau_values[ti], cells));
    }
    return result;
}

void write_sweep_outputs(const SweepResult& result, const std::filesystem::path& dir) {
    const auto& cfg = result.config;
    const double p = cfg.density->probability(cfg.n);
    const double m = cfg.density->links_per_user(cfg.n);

    std::string summary = "tau,p,runs,mean_b,mean_lifetime,mean_recovery,mean_rewired_fraction\n";
    std::string detail =
        "tau,p,m,runs,mean_b_final,se_b_final,mean_b_time,se_b_time,lifetimes,mean_lifetime,recoveries,"
        "mean_recovery,mean_rewired_fraction,mean_core_size,mean_max_out_degree,included_samples,"
        "mean_lambda1_included,mean_core_size_included,unconverged_steps\n";
    std::string hist_q = "tau,core_size,probability\n";
    std::string hist_l = "tau,bin_lo,bin_hi,probability\n";
    std::string segments = "tau,run,kind,length\n";

    for (const auto& s : result.per_tau) {
        const auto tau = format_double(s.tau);
        summary += tau + ',' + format_double(p) + ',' + std::to_string(cfg.runs) + ',' + format_double(s.b_final.mean) +
                   ',' + format_double(s.robustness.mean_lifetime) + ',' + format_double(s.robustness.mean_recovery) +
                   ',' + format_double(s.robustness.mean_rewired_fraction) + '\n';
        detail += tau + ',' + format_double(p) + ',' + format_double(m) + ',' + std::to_string(cfg.runs) + ',' +
                  format_double(s.b_final.mean) + ',' + format_double(s.b_final.se) + ',' +
                  format_double(s.b_time.mean) + ',' + format_double(s.b_time.se) + ',' +
                  std::to_string(s.robustness.lifetimes.size()) + ',' + format_double(s.robustness.mean_lifetime) +
                  ',' + std::to_string(s.robustness.recoveries.size()) + ',' +
                  format_double(s.robustness.mean_recovery) + ',' + format_double(s.robustness.mean_rewired_fraction) +
                  ',' + format_double(s.core_size.mean) + ',' + format_double(s.max_out_degree.mean) + ',' +
                  std::to_string(s.ensemble ? s.ensemble->included : 0) + ',' +
                  format_double(s.ensemble ? s.ensemble->mean_lambda1 : std::nan("")) + ',' +
                  format_double(s.ensemble ? s.ensemble->mean_core_size : std::nan("")) + ',' +
                  std::to_string(s.unconverged_steps) + '\n';
        if (s.ensemble) {
            for (const auto& [q, prob] : s.ensemble->core_size_histogram) {
                hist_q += tau + ',' + std::to_string(q) + ',' + format_double(prob) + '\n';
            }
            const auto& h = s.ensemble->lambda1_histogram;
            for (std::size_t k = 0; k < h.mass.size(); ++k) {
                if (h.mass[k] == 0.0) continue;
                hist_l += tau + ',' + format_double(static_cast<double>(k) * h.bin_width) + ',' +
                          format_double(static_cast<double>(k + 1) * h.bin_width) + ',' + format_double(h.mass[k]) +
                          '\n';
            }
        }
    }
    for (const auto& c : result.cells) {
        const auto tau = format_double(cfg.tau_values[c.tau_index]);
        for (auto len : c.robustness.lifetimes) {
            segments += tau + ',' + std::to_string(c.run) + ",lifetime," + std::to_string(len) + '\n';
        }
        for (auto len : c.robustness.recoveries) {
            segments += tau + ',' + std::to_string(c.run) + ",recovery," + std::to_string(len) + '\n';
        }
    }

    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw IoError("cannot create output directory '" + dir.string() + "'");
    write_file_atomic(dir / "summary.csv", summary);
    write_file_atomic(dir / "summary_detail.csv", detail);
    write_file_atomic(dir / "hist_core_size.csv", hist_q);
    write_file_atomic(dir / "hist_lambda1.csv", hist_l);
    write_file_atomic(dir / "segments.csv", segments);
}

}  // namespace repnet
