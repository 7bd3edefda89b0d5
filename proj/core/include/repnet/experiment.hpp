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
#include <functional>
#include <optional>
#include <vector>

#include "repnet/config.hpp"
#include "repnet/metrics.hpp"

namespace repnet {

/// Everything kept from one simulated (cost, run) cell.
struct RunSummary {
    std::size_t tau_index = 0;
    std::size_t run = 0;
    std::uint64_t seed = 0;
    StepRecord final_record;
    double b_time_average = 0.0;   // mean b_mean after burn-in
    RobustnessSummary robustness;  // from every step, not only the samples
    std::vector<StepRecord> samples;            // every sample_every steps plus the final step
    std::vector<std::size_t> sample_max_out_degree;  // aligned with samples
    std::size_t unconverged_steps = 0;
};

/// Aggregate over the runs of one cost value.
struct TauSummary {
    double tau = 0.0;
    MeanSe b_final;  // <b> as the run-final population average
    MeanSe b_time;   // <b> as the post-burn-in time average
    RobustnessSummary robustness;           // segments pooled over runs
    std::optional<EnsembleSummary> ensemble;  // unset when the filter leaves nothing
    MeanSe max_out_degree;                  // over sampled snapshots
    MeanSe core_size;                       // over sampled snapshots, unfiltered
    std::size_t unconverged_steps = 0;
};

struct SweepResult {
    ExperimentConfig config;
    std::vector<RunSummary> cells;  // ordered by (tau_index, run)
    std::vector<TauSummary> per_tau;
};

/// Called with every step record of a run, in order.
using RecordSink = std::function<void(const StepRecord&)>;

/// Simulates one cell. The seed is derive_seed(config.seed, tau_index, run).
RunSummary simulate_run(const ExperimentConfig& config, std::size_t tau_index, std::size_t run,
                        const RecordSink& sink = {});

/// Runs every (tau, run) cell on resolve_workers(config.workers) threads and
/// aggregates per cost value. The result does not depend on the worker count.
SweepResult run_experiment(const ExperimentConfig& config);

/// Aggregates already simulated cells of one cost value.
TauSummary summarize_tau(const ExperimentConfig& config, double tau, std::span<const RunSummary> cells);

/// Writes summary.csv, summary_detail.csv, hist_core_size.csv,
/// hist_lambda1.csv and segments.csv into `dir` (created if needed).
void write_sweep_outputs(const SweepResult& result, const std::filesystem::path& dir);

}  // namespace repnet
