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
#include <map>
#include <span>
#include <vector>

namespace repnet {

/// Per network-time observation of a running simulation.
struct StepRecord {
    std::size_t t = 0;
    double b_mean = 0.0;  // population average of b
    double lambda1 = 0.0;
    std::size_t core_size = 0;
    bool core_alive = false;
    std::size_t departed_count = 0;
    double y_remaining = 1.0;  // 1 - departed / N
    bool whole_network = false;

    friend bool operator==(const StepRecord&, const StepRecord&) = default;
};

/// (1/N) sum_i b_i. Throws ValidationError on empty input.
double population_mean_benefit(std::span<const double> b);

/// Core lifetimes (maximal runs with a core) and recovery times (maximal runs
/// without one), in network-time steps. The run still open at the end of the
/// trace is censored and left out of both lists.
struct RobustnessSummary {
    std::vector<std::size_t> lifetimes;
    std::vector<std::size_t> recoveries;
    double mean_lifetime = 0.0;  // NaN when no lifetime completed
    double mean_recovery = 0.0;  // NaN when no recovery completed
    double mean_rewired_fraction = 0.0;
    std::size_t steps = 0;
    std::size_t censored_length = 0;  // length of the open trailing segment
};

/// Streaming segmentation of the core-alive sequence.
class RobustnessTracker {
public:
    void push(bool core_alive, double rewired_fraction);
    RobustnessSummary finish() const;

private:
    std::vector<std::size_t> lifetimes_;
    std::vector<std::size_t> recoveries_;
    std::size_t steps_ = 0;
    std::size_t open_ = 0;
    bool open_alive_ = false;
    double rewired_sum_ = 0.0;
};

/// Segments a time-ordered trace. Throws ValidationError on an empty trace.
RobustnessSummary robustness_from_trace(std::span<const StepRecord> records);

/// Pools segments of several runs; the rewired fraction is weighted by steps.
RobustnessSummary pool_robustness(std::span<const RobustnessSummary> parts);

struct RunRecord {
    std::size_t run = 0;
    StepRecord record;
};

/// Probability mass per fixed-width bin; bin k covers [k w, (k + 1) w).
struct Histogram {
    double bin_width = 0.01;
    std::vector<double> mass;
};

struct EnsembleSummary {
    double mean_b = 0.0;  // average over runs of the final b_mean
    std::size_t runs = 0;
    std::size_t t_max = 0;
    std::map<std::size_t, double> core_size_histogram;  // Q -> P(Q)
    Histogram lambda1_histogram;
    std::size_t included = 0;  // records feeding the histograms
    double mean_core_size = 0.0;
    double mean_lambda1 = 0.0;
};

inline constexpr double kLambda1BinWidth = 0.01;

/// Ensemble average over runs plus P(Q) and P(lambda1) over the sampled
/// records. With `filter_whole`, only records whose network is one connected
/// component without isolated users enter the histograms. Throws
/// ValidationError ("empty ensemble") when nothing is left to aggregate.
EnsembleSummary ensemble_average(std::span<const RunRecord> records, bool filter_whole,
                                 double bin_width = kLambda1BinWidth);

/// Mean of b_mean over records with t >= burn_in. Throws when none qualify.
double time_average_benefit(std::span<const StepRecord> records, std::size_t burn_in);

struct MeanSe {
    double mean = 0.0;
    double se = 0.0;  // sample standard deviation / sqrt(count)
    std::size_t count = 0;
};

MeanSe mean_se(std::span<const double> values);

struct RankSumResult {
    double u = 0.0;        // Mann-Whitney U of the first sample
    double z = 0.0;        // normal approximation, tie- and continuity-corrected
    double p_value = 1.0;  // two-sided
};

/// Wilcoxon rank-sum test. Throws ValidationError if either sample is empty.
RankSumResult rank_sum_test(std::span<const double> x, std::span<const double> y);

}  // namespace repnet
