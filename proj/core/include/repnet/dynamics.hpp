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
#include <optional>
#include <span>
#include <vector>

#include "repnet/network.hpp"
#include "repnet/reputation.hpp"
#include "repnet/rng.hpp"

namespace repnet {

/// Stay/leave rule: a user stays while b_i - tau >= 0.
struct ExitRule {
    double tau = 0.0;
    /// When nobody falls below tau, the user with the lowest b leaves anyway
    /// (extremal dynamics), keeping the network in motion at every cost level.
    bool force_min_exit = true;
    /// Reputations within this distance of the minimum count as tied for the
    /// forced exit.
    double tie_tolerance = 1e-9;

    void validate() const;
};

/// Random wiring of newcomers: each ordered pair (new, other) and (other, new)
/// is linked independently with probability p.
class RewireModel {
public:
    static RewireModel from_probability(double p);
    /// m average links per user over n users: p = m / (n - 1).
    static RewireModel from_links_per_user(double m, std::size_t n);

    double p() const noexcept { return p_; }
    /// m = p (n - 1).
    double links_per_user(std::size_t n) const noexcept { return p_ * static_cast<double>(n > 0 ? n - 1 : 0); }

private:
    explicit RewireModel(double p) : p_(p) {}
    double p_ = 0.0;
};

/// Network with every ordered pair linked independently with probability p.
DirectedNetwork random_network(std::size_t n, const RewireModel& model, Rng& rng);

/// Users whose reputation is below the cost, or one uniformly chosen user of
/// minimal reputation when that set is empty and the forced exit is on.
/// Returned ids are sorted. Throws ValidationError on an empty vector.
std::vector<NodeId> select_leavers(std::span<const double> b, const ExitRule& rule, Rng& rng);

/// Removes every edge of each leaver, then re-occupies each slot with a
/// newcomer wired at random. Every ordered pair involving a newcomer is drawn
/// exactly once, including pairs of two newcomers.
DirectedNetwork rewire_newcomers(DirectedNetwork net, std::span<const NodeId> leavers, const RewireModel& model,
                                 Rng& rng);

/// Same as rewire_newcomers, mutating `net`.
void rewire_newcomers_in_place(DirectedNetwork& net, std::span<const NodeId> leavers, const RewireModel& model,
                               Rng& rng);

struct StepOutcome {
    std::size_t t = 0;
    std::vector<NodeId> departed;
    std::vector<NodeId> arrived;  // same slots as departed, now holding newcomers
    std::vector<double> b_before;
    std::optional<NodeId> forced_exit;
    bool solver_converged = true;
};

struct StepResult {
    DirectedNetwork network;
    StepOutcome outcome;
    EquilibriumResult equilibrium;
};

/// One unit of network time: equilibrium -> leavers -> newcomers.
StepResult step(const DirectedNetwork& net, const ExitRule& rule, const RewireModel& model,
                const SolverConfig& solver, Rng& rng, std::size_t t = 0);

}  // namespace repnet
