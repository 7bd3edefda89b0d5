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
#include "repnet/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "repnet/error.hpp"

namespace repnet {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double mean_of(const std::vector<std::size_t>& v) {
    if (v.empty()) return kNaN;
    double s = 0.0;
    for (auto x : v) s += static_cast<double>(x);
    return s / static_cast<double>(v.size());
}

}  // namespace

double population_mean_benefit(std::span<const double> b) {
    if (b.empty()) throw ValidationError("population mean of an empty reputation vector");
    return std::accumulate(b.begin(), b.end(), 0.0) / static_cast<double>(b.size());
}

void RobustnessTracker::push(bool core_alive, double rewired_fraction) {
    if (open_ > 0 && core_alive != open_alive_) {
        (open_alive_ ? lifetimes_ : recoveries_).push_back(open_);
        open_ = 0;
    }
    open_alive_ = core_alive;
    ++open_;
    ++steps_;
    rewired_sum_ += rewired_fraction;
}

RobustnessSummary RobustnessTracker::finish() const {
    RobustnessSummary s;
    s.lifetimes = lifetimes_;
    s.recoveries = recoveries_;
    s.mean_lifetime = mean_of(lifetimes_);
    s.mean_recovery = mean_of(recoveries_);
    s.steps = steps_;
    s.censored_length = open_;
    s.mean_rewired_fraction = steps_ ? rewired_sum_ / static_cast<double>(steps_) : kNaN;
    return s;
}

RobustnessSummary robustness_from_trace(std::span<const StepRecord> records) {
    if (records.empty()) throw ValidationError("robustness of an empty trace");
    RobustnessTracker tracker;
    for (const auto& r : records) tracker.push(r.core_alive, 1.0 - r.y_remaining);
    return tracker.finish();
}

RobustnessSummary pool_robustness(std::span<const RobustnessSummary> parts) {
    RobustnessSummary pooled;
    double rewired = 0.0;
    for (const auto& p : parts) {
        pooled.lifetimes.insert(pooled.lifetimes.end(), p.lifetimes.begin(), p.lifetimes.end());
        pooled.recoveries.insert(pooled.recoveries.end(), p.recoveries.begin(), p.recoveries.end());
        pooled.steps += p.steps;
        pooled.censored_length += p.censored_length;
        if (p.steps) rewired += p.mean_rewired_fraction * static_cast<double>(p.steps);
    }
    pooled.mean_lifetime = mean_of(pooled.lifetimes);
    pooled.mean_recovery = mean_of(pooled.recoveries);
    pooled.mean_rewired_fraction = pooled.steps ? rewired / static_cast<double>(pooled.steps) : kNaN;
    return pooled;
}

EnsembleSummary ensemble_average(std::span<const RunRecord> records, bool filter_whole, double bin_width) {
    if (!(bin_width > 0.0)) throw ValidationError("histogram bin width must be > 0");
    EnsembleSummary s;
    std::map<std::size_t, const StepRecord*> final_by_run;
    std::vector<const StepRecord*> included;
    for (const auto& rr : records) {
        auto& slot = final_by_run[rr.run];
        if (!slot || rr.record.t >= slot->t) slot = &rr.record;
        if (!filter_whole || rr.record.whole_network) included.push_back(&rr.record);
    }
    if (final_by_run.empty() || included.empty()) throw ValidationError("empty ensemble");

    double sum_b = 0.0;
    for (const auto& [run, rec] : final_by_run) {
        sum_b += rec->b_mean;
        s.t_max = std::max(s.t_max, rec->t + 1);
    }
    s.runs = final_by_run.size();
    s.mean_b = sum_b / static_cast<double>(s.runs);

    s.included = included.size();
    const double weight = 1.0 / static_cast<double>(included.size());
    double lambda_max = 0.0, sum_q = 0.0, sum_l = 0.0;
    for (const auto* r : included) {
        s.core_size_histogram[r->core_size] += weight;
        lambda_max = std::max(lambda_max, r->lambda1);
        sum_q += static_cast<double>(r->core_size);
        sum_l += r->lambda1;
    }
    s.mean_core_size = sum_q * weight;
    s.mean_lambda1 = sum_l * weight;
    s.lambda1_histogram.bin_width = bin_width;
    s.lambda1_histogram.mass.assign(static_cast<std::size_t>(std::floor(lambda_max / bin_width)) + 1, 0.0);
    for (const auto* r : included) {
        const auto bin = static_cast<std::size_t>(std::floor(std::max(0.0, r->lambda1) / bin_width));
        s.lambda1_histogram.mass[std::min(bin, s.lambda1_histogram.mass.size() - 1)] += weight;
    }
    return s;
}

double time_average_benefit(std::span<const StepRecord> records, std::size_t burn_in) {
    double sum = 0.0;
    std::size_t count = 0;
    for (const auto& r : records) {
        if (r.t >= burn_in) {
            sum += r.b_mean;
            ++count;
        }
    }
    if (count == 0) throw ValidationError("no records after burn-in");
    return sum / static_cast<double>(count);
}

MeanSe mean_se(std::span<const double> values) {
    MeanSe r;
    r.count = values.size();
    if (values.empty()) {
        r.mean = r.se = kNaN;
        return r;
    }
    r.mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
    if (values.size() < 2) {
        r.se = kNaN;
        return r;
    }
    double ss = 0.0;
    for (double v : values) ss += (v - r.mean) * (v - r.mean);
    const double sd = std::sqrt(ss / static_cast<double>(values.size() - 1));
    r.se = sd / std::sqrt(static_cast<double>(values.size()));
    return r;
}

RankSumResult rank_sum_test(std::span<const double> x, std::span<const double> y) {
    if (x.empty() || y.empty()) throw ValidationError("rank-sum test needs two non-empty samples");
    struct Obs {
        double v;
        bool first;
    };
    std::vector<Obs> all;
    all.reserve(x.size() + y.size());
    for (double v : x) all.push_back({v, true});
    for (double v : y) all.push_back({v, false});
    std::sort(all.begin(), all.end(), [](const Obs& a, const Obs& b) { return a.v < b.v; });

    const double n1 = static_cast<double>(x.size());
    const double n2 = static_cast<double>(y.size());
    const double n = n1 + n2;
    double rank_sum = 0.0, tie_term = 0.0;
    for (std::size_t i = 0; i < all.size();) {
        std::size_t j = i;
        while (j < all.size() && all[j].v == all[i].v) ++j;
        const double avg_rank = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
        const double t = static_cast<double>(j - i);
        tie_term += t * t * t - t;
        for (std::size_t k = i; k < j; ++k) {
            if (all[k].first) rank_sum += avg_rank;
        }
        i = j;
    }
    RankSumResult r;
    r.u = rank_sum - n1 * (n1 + 1.0) / 2.0;
    const double mu = n1 * n2 / 2.0;
    const double var = n1 * n2 / 12.0 * ((n + 1.0) - tie_term / (n * (n - 1.0)));
    if (var <= 0.0) {
        r.z = 0.0;
        r.p_value = 1.0;
        return r;
    }
    const double diff = r.u - mu;
    const double corrected = std::max(0.0, std::abs(diff) - 0.5);
    r.z = std::copysign(corrected / std::sqrt(var), diff);
    r.p_value = std::min(1.0, std::erfc(std::abs(r.z) / std::sqrt(2.0)));
    return r;
}

}  // namespace repnet
