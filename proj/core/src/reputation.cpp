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
#include "repnet/reputation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "repnet/error.hpp"

namespace repnet {

namespace {

// Entries this small are flushed to zero during dense squaring so that the
// non-dominant part does not degrade into denormals.
constexpr double kFlushBelow = 1e-250;
constexpr std::size_t kCheckpoint = 128;
constexpr std::size_t kMaxSquarings = 64;

double normalize_by_max(std::vector<double>& v) {
    const double m = *std::max_element(v.begin(), v.end());
    if (m > 0.0) {
        for (double& e : v) e /= m;
    }
    return m;
}

double max_abs_diff(std::span<const double> a, std::span<const double> b) {
    double r = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) r = std::max(r, std::abs(a[i] - b[i]));
    return r;
}

// y = (I + A) b
void shifted_product(const DirectedNetwork& net, std::span<const double> b, std::vector<double>& y) {
    for (NodeId i = 0; i < net.size(); ++i) {
        double s = b[i];
        for (NodeId j : net.followers(i)) s += b[j];
        y[i] = s;
    }
}

// Longest-path limit for networks without cycles. Returns false if a cycle exists.
bool acyclic_limit(const DirectedNetwork& net, std::vector<double>& b, std::size_t& depth) {
    const std::size_t n = net.size();
    std::vector<std::size_t> indeg(n);
    std::vector<NodeId> queue;
    for (NodeId v = 0; v < n; ++v) {
        indeg[v] = net.followers(v).size();
        if (indeg[v] == 0) queue.push_back(v);
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (NodeId w : net.following(queue[head])) {
            if (--indeg[w] == 0) queue.push_back(w);
        }
    }
    if (queue.size() != n) return false;

    // Iterate v <- A v (normalised) until the next product vanishes; the last
    // non-zero vector is A^D 1 with D the longest path length.
    b.assign(n, 1.0);
    std::vector<double> next(n);
    depth = 0;
    for (;;) {
        bool any = false;
        for (NodeId i = 0; i < n; ++i) {
            double s = 0.0;
            for (NodeId j : net.followers(i)) s += b[j];
            next[i] = s;
            any = any || s > 0.0;
        }
        if (!any) break;
        normalize_by_max(next);
        b.swap(next);
        ++depth;
    }
    return true;
}

// Finishes a stalled iteration: b <- normalise((I + A)^(2^s) b) for growing s.
// Stalls come from degenerate spectra (equal-lambda components feeding each
// other), where the error only decays like 1 / power. Squaring is done in
// long double because rounding in the huge powers eventually splits the tied
// eigenvalues and drives the iterate away again; the best iterate is kept.
double dense_squaring(const DirectedNetwork& net, std::vector<double>& b, double tolerance, std::size_t& squarings) {
    using Real = long double;
    const std::size_t n = net.size();
    std::vector<Real> p(n * n, 0.0L), q(n * n, 0.0L);
    for (NodeId i = 0; i < n; ++i) {
        p[i * n + i] = 1.0L;
        for (NodeId j : net.followers(i)) p[i * n + j] = 1.0L;
    }
    std::vector<Real> cur(b.begin(), b.end()), next(n);
    std::vector<Real> best = cur;
    Real best_residual = std::numeric_limits<Real>::infinity();

    squarings = 0;
    while (squarings < kMaxSquarings) {
        std::fill(q.begin(), q.end(), 0.0L);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t k = 0; k < n; ++k) {
                const Real pik = p[i * n + k];
                if (pik == 0.0L) continue;
                const Real* row = &p[k * n];
                Real* dst = &q[i * n];
                for (std::size_t j = 0; j < n; ++j) dst[j] += pik * row[j];
            }
        }
        const Real qmax = *std::max_element(q.begin(), q.end());
        for (Real& e : q) {
            e /= qmax;
            if (e < kFlushBelow) e = 0.0L;
        }
        p.swap(q);
        ++squarings;

        Real vmax = 0.0L;
        for (std::size_t i = 0; i < n; ++i) {
            Real acc = 0.0L;
            for (std::size_t j = 0; j < n; ++j) acc += p[i * n + j] * cur[j];
            next[i] = acc;
            vmax = std::max(vmax, acc);
        }
        Real residual = 0.0L;
        for (std::size_t i = 0; i < n; ++i) {
            next[i] /= vmax;
            residual = std::max(residual, std::abs(next[i] - cur[i]));
        }
        cur.swap(next);
        if (residual < best_residual) {
            best_residual = residual;
            best = cur;
        }
        if (residual < tolerance) break;
    }
    b.assign(best.begin(), best.end());
    normalize_by_max(b);
    return static_cast<double>(best_residual);
}

void finish(const DirectedNetwork& net, EquilibriumResult& r) {
    r.z = argmax(r.b);
    double lambda = 0.0;
    for (NodeId j : net.followers(r.z)) lambda += r.b[j];
    r.lambda1 = lambda;
    const double total = std::accumulate(r.b.begin(), r.b.end(), 0.0);
    r.x.resize(r.b.size());
    for (std::size_t i = 0; i < r.b.size(); ++i) r.x[i] = total > 0.0 ? r.b[i] / total : 0.0;
}

EquilibriumResult solve_shifted_power(const DirectedNetwork& net, const SolverConfig& cfg) {
    const std::size_t n = net.size();
    EquilibriumResult r;

    std::size_t depth = 0;
    if (acyclic_limit(net, r.b, depth)) {
        r.acyclic = true;
        r.converged = true;
        r.iterations = depth;
        r.residual = 0.0;
        finish(net, r);
        return r;
    }

    const std::size_t limit = cfg.iteration_limit(n);
    const bool can_square = cfg.dense_fallback_max_n > 0 && n <= cfg.dense_fallback_max_n;
    std::vector<double> b(n, 1.0), y(n);
    double residual = 0.0;
    double checkpoint_residual = 0.0;
    bool stalled = false;
    std::size_t k = 0;
    while (k < limit) {
        shifted_product(net, b, y);
        normalize_by_max(y);
        residual = max_abs_diff(y, b);
        b.swap(y);
        ++k;
        if (residual < cfg.tolerance) break;
        if (can_square && k % kCheckpoint == 0) {
            // Project the remaining work from the contraction over the last
            // checkpoint window; sub-geometric decay shows up as a rate near 1.
            if (checkpoint_residual > 0.0) {
                const double rate = residual / checkpoint_residual;
                if (rate >= 1.0) {
                    stalled = true;
                } else {
                    const double needed = kCheckpoint * std::log(cfg.tolerance / residual) / std::log(rate);
                    stalled = static_cast<double>(k) + needed > static_cast<double>(limit);
                }
                if (stalled) break;
            }
            checkpoint_residual = residual;
        }
    }
    if (residual >= cfg.tolerance && can_square && (stalled || k >= limit)) {
        residual = dense_squaring(net, b, cfg.tolerance, r.squarings);
    }
    r.b = std::move(b);
    r.iterations = k;
    r.residual = residual;
    r.converged = residual < cfg.tolerance;
    finish(net, r);
    return r;
}

EquilibriumResult solve_ode(const DirectedNetwork& net, const SolverConfig& cfg) {
    const std::size_t n = net.size();
    double dt = cfg.ode_dt;
    if (dt <= 0.0) {
        std::size_t max_in = 0;
        for (NodeId v = 0; v < n; ++v) max_in = std::max(max_in, net.followers(v).size());
        dt = 0.5 / (1.0 + static_cast<double>(max_in));
    }
    EquilibriumResult r;
    std::vector<double> b(n, 1.0);
    const std::size_t limit = cfg.iteration_limit(n);
    double residual = 0.0;
    std::size_t k = 0;
    while (k < limit) {
        auto next = relative_reputation_ode_step(net, b, dt);
        residual = max_abs_diff(next, b);
        b = std::move(next);
        ++k;
        if (residual < cfg.tolerance) break;
    }
    normalize_by_max(b);
    r.b = std::move(b);
    r.iterations = k;
    r.residual = residual;
    r.converged = residual < cfg.tolerance;
    finish(net, r);
    return r;
}

}  // namespace

void SolverConfig::validate() const {
    if (!(tolerance > 0.0)) throw ValidationError("solver tolerance must be > 0");
    if (ode_dt < 0.0) throw ValidationError("ode_dt must be >= 0");
}

NodeId argmax(std::span<const double> v) {
    NodeId best = 0;
    for (NodeId i = 1; i < v.size(); ++i) {
        if (v[i] > v[best]) best = i;
    }
    return best;
}

EquilibriumResult equilibrium(const DirectedNetwork& net, const SolverConfig& cfg) {
    if (net.size() == 0) throw ValidationError("equilibrium of an empty network is undefined");
    cfg.validate();
    return cfg.mode == SolverMode::ShiftedPower ? solve_shifted_power(net, cfg) : solve_ode(net, cfg);
}

double perron_eigenvalue(const DirectedNetwork& net) {
    if (net.size() == 0) return 0.0;
    SolverConfig cfg;
    cfg.tolerance = 1e-12;
    return equilibrium(net, cfg).lambda1;
}

std::vector<double> relative_reputation_derivative(const DirectedNetwork& net, std::span<const double> b) {
    if (b.size() != net.size()) throw ValidationError("reputation vector size mismatch");
    const NodeId z = argmax(b);
    double boost_z = 0.0;
    for (NodeId j : net.followers(z)) boost_z += b[j];
    std::vector<double> d(b.size());
    for (NodeId i = 0; i < b.size(); ++i) {
        double s = 0.0;
        for (NodeId j : net.followers(i)) s += b[j];
        d[i] = s - b[i] * boost_z;
    }
    return d;
}

std::vector<double> relative_reputation_ode_step(const DirectedNetwork& net, std::span<const double> b, double dt) {
    if (!(dt > 0.0)) throw ValidationError("dt must be > 0");
    auto d = relative_reputation_derivative(net, b);
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = b[i] + dt * d[i];
    return d;
}

std::vector<double> absolute_reputation_derivative(const DirectedNetwork& net, std::span<const double> X,
                                                   double phi) {
    if (X.size() != net.size()) throw ValidationError("reputation vector size mismatch");
    if (phi < 0.0) throw ValidationError("decay rate phi must be >= 0");
    std::vector<double> d(X.size());
    for (NodeId i = 0; i < X.size(); ++i) {
        double s = 0.0;
        for (NodeId j : net.followers(i)) s += X[j];
        d[i] = s - phi * X[i];
    }
    return d;
}

std::size_t chain_length_bound(double b_anchor, double tau, double lambda1) {
    if (!(tau > 0.0 && tau < 1.0)) throw DomainError("tau must lie in (0, 1)");
    if (!(b_anchor > 0.0 && b_anchor <= 1.0)) throw DomainError("b_anchor must lie in (0, 1]");
    if (!(lambda1 > 1.0)) {
        throw DomainError("unbounded or empty chain: lambda1 = " + std::to_string(lambda1) + " <= 1");
    }
    if (!(b_anchor > tau)) throw DomainError("unbounded or empty chain: b_anchor <= tau");
    double q = std::log(b_anchor / tau) / std::log(lambda1);
    // Snap ratios that are integers up to rounding, so b_anchor / tau == lambda1^k gives k.
    const double nearest = std::round(q);
    if (std::abs(q - nearest) <= 1e-12 * std::max(1.0, nearest)) q = nearest;
    return static_cast<std::size_t>(std::ceil(q));
}

double attenuation_check(const DirectedNetwork& net, const EquilibriumResult& eq) {
    if (!(eq.lambda1 > 0.0)) throw DomainError("attenuation undefined for lambda1 <= 0");
    if (eq.b.size() != net.size()) throw ValidationError("reputation vector size mismatch");
    double worst = 0.0;
    for (NodeId i = 0; i < net.size(); ++i) {
        double s = 0.0;
        for (NodeId j : net.followers(i)) s += eq.b[j];
        worst = std::max(worst, std::abs(eq.b[i] - s / eq.lambda1));
    }
    return worst;
}

}  // namespace repnet
