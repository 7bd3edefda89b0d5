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
#include "repnet/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "repnet/error.hpp"

namespace repnet {

void ExitRule::validate() const {
    if (!(tau >= 0.0 && tau < 1.0)) throw ValidationError("tau must lie in [0, 1), got " + std::to_string(tau));
    if (tie_tolerance < 0.0) throw ValidationError("tie_tolerance must be >= 0");
}

RewireModel RewireModel::from_probability(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("link probability p must lie in [0, 1]");
    return RewireModel(p);
}

RewireModel RewireModel::from_links_per_user(double m, std::size_t n) {
    if (n < 2) throw ValidationError("links per user needs n >= 2");
    if (!(m >= 0.0)) throw ValidationError("links per user m must be >= 0");
    const double p = m / static_cast<double>(n - 1);
    if (p > 1.0) throw ValidationError("links per user m exceeds n - 1");
    return RewireModel(p);
}

DirectedNetwork random_network(std::size_t n, const RewireModel& model, Rng& rng) {
    DirectedNetwork net(n);
    for (NodeId u = 0; u < n; ++u) {
        for (NodeId v = 0; v < n; ++v) {
            if (u != v && rng.bernoulli(model.p())) net.add_edge(u, v);
        }
    }
    return net;
}

std::vector<NodeId> select_leavers(std::span<const double> b, const ExitRule& rule, Rng& rng) {
    if (b.empty()) throw ValidationError("cannot select leavers from an empty reputation vector");
    std::vector<NodeId> leavers;
    for (NodeId i = 0; i < b.size(); ++i) {
        if (b[i] < rule.tau) leavers.push_back(i);
    }
    if (leavers.empty() && rule.force_min_exit) {
        const double lowest = *std::min_element(b.begin(), b.end());
        std::vector<NodeId> tied;
        for (NodeId i = 0; i < b.size(); ++i) {
            if (b[i] <= lowest + rule.tie_tolerance) tied.push_back(i);
        }
        leavers.push_back(tied.size() == 1 ? tied.front() : tied[rng.below(tied.size())]);
    }
    return leavers;
}

void rewire_newcomers_in_place(DirectedNetwork& net, std::span<const NodeId> leavers, const RewireModel& model,
                               Rng& rng) {
    const std::size_t n = net.size();
    for (NodeId v : leavers) {
        if (v >= n) throw ValidationError("leaver id out of range");
        net.clear_node(v);
    }
    std::vector<bool> wired(n, false);
    for (NodeId fresh : leavers) {
        if (wired[fresh]) continue;  // duplicate id in the input
        for (NodeId other = 0; other < n; ++other) {
            if (other == fresh || wired[other]) continue;
            if (rng.bernoulli(model.p())) net.add_edge(fresh, other);
            if (rng.bernoulli(model.p())) net.add_edge(other, fresh);
        }
        wired[fresh] = true;
    }
}

DirectedNetwork rewire_newcomers(DirectedNetwork net, std::span<const NodeId> leavers, const RewireModel& model,
                                 Rng& rng) {
    rewire_newcomers_in_place(net, leavers, model, rng);
    return net;
}

StepResult step(const DirectedNetwork& net, const ExitRule& rule, const RewireModel& model,
                const SolverConfig& solver, Rng& rng, std::size_t t) {
    rule.validate();
    StepResult result{DirectedNetwork{}, StepOutcome{}, equilibrium(net, solver)};
    auto& out = result.outcome;
    out.t = t;
    out.b_before = result.equilibrium.b;
    out.solver_converged = result.equilibrium.converged;
    out.departed = select_leavers(out.b_before, rule, rng);
    if (out.departed.size() == 1 && !(out.b_before[out.departed.front()] < rule.tau)) {
        out.forced_exit = out.departed.front();
    }
    out.arrived = out.departed;
    result.network = out.departed.empty() ? net : rewire_newcomers(net, out.departed, model, rng);
    return result;
}

}  // namespace repnet
