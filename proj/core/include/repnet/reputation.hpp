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
#include <span>
#include <vector>

#include "repnet/network.hpp"

namespace repnet {

enum class SolverMode { ShiftedPower, OdeIntegration };

struct SolverConfig {
    double tolerance = 1e-9;       // max-norm change between iterates
    std::size_t max_iterations = 0;  // 0 selects 100 * n + 1000
    SolverMode mode = SolverMode::ShiftedPower;
    /// Euler step for OdeIntegration; 0 picks 0.5 / (1 + max in-degree).
    double ode_dt = 0.0;
    /// Largest network for which a stalled power iteration is finished by
    /// dense repeated squaring of (I + A). 0 disables the fallback.
    std::size_t dense_fallback_max_n = 256;

    std::size_t iteration_limit(std::size_t n) const { return max_iterations ? max_iterations : 100 * n + 1000; }

    /// Throws ValidationError when tolerance <= 0 or dt < 0.
    void validate() const;
};

/// Equilibrium relative reputations of a fixed network.
struct EquilibriumResult {
    std::vector<double> b;  // max-normalised, max(b) == 1
    std::vector<double> x;  // sum-normalised, sum(x) == 1
    double lambda1 = 0.0;   // sum_j a_zj b_j at the final iterate
    NodeId z = 0;           // argmax of b, smallest index on ties
    std::size_t iterations = 0;
    bool converged = false;
    double residual = 0.0;
    /// No directed cycle: the limit is computed in closed form and the
    /// spectral radius is exactly 0.
    bool acyclic = false;
    /// Number of dense squarings used after the sparse iteration stalled.
    std::size_t squarings = 0;
};

/// Limit of the shifted iteration b <- (I + A) b / max((I + A) b) started from
/// the all-ones vector, i.e. the Perron-Frobenius direction of A.
///
/// On acyclic networks the limit is A^D 1 (normalised) where D is the length
/// of the longest directed path; it is computed directly. When the sparse
/// iteration converges too slowly (degenerate spectra, Jordan blocks) and the
/// network is small enough, the remaining iterations are replaced by repeated
/// squaring of I + A. Non-convergence is reported through `converged`, never
/// thrown. Throws ValidationError for an empty network.
EquilibriumResult equilibrium(const DirectedNetwork& net, const SolverConfig& cfg = {});

/// Perron eigenvalue of a network, solved to 1e-12.
double perron_eigenvalue(const DirectedNetwork& net);

/// db_i/dt = sum_j a_ij b_j - b_i sum_j a_zj b_j with z = argmax b.
std::vector<double> relative_reputation_derivative(const DirectedNetwork& net, std::span<const double> b);

/// One explicit Euler step of the relative reputation dynamics.
std::vector<double> relative_reputation_ode_step(const DirectedNetwork& net, std::span<const double> b, double dt);

/// dX_i/dt = sum_j a_ij X_j - phi X_i.
std::vector<double> absolute_reputation_derivative(const DirectedNetwork& net, std::span<const double> X,
                                                   double phi);

/// Longest simple chain hanging off a core user with reputation `b_anchor`
/// whose members still cover the cost: ceil(ln(b_anchor / tau) / ln(lambda1)).
/// Chain position 1 is the anchor itself, position k has b_anchor / lambda1^(k-1).
/// Throws DomainError unless 0 < tau < 1, 0 < b_anchor <= 1, lambda1 > 1 and
/// b_anchor > tau.
std::size_t chain_length_bound(double b_anchor, double tau, double lambda1);

/// max_i | b_i - (1 / lambda1) sum_j a_ij b_j |. Throws DomainError when
/// lambda1 <= 0.
double attenuation_check(const DirectedNetwork& net, const EquilibriumResult& eq);

/// Index of the largest entry, smallest index on ties.
NodeId argmax(std::span<const double> v);

}  // namespace repnet
