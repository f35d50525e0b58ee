// Copyright 2026 The cvcomb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CVCOMB_GAUSSIAN_H
#define CVCOMB_GAUSSIAN_H

#include <Eigen/Core>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "cvcomb/lattice.h"

namespace cvcomb {

// Conventions: hbar = 1, [q, p] = i, vacuum covariance identity/2, phase-space
// ordering (q_1..q_n, p_1..p_n).

/// Gaussian state of n qumodes.
struct GaussianState {
    Eigen::VectorXd mean;  // length 2n
    Eigen::MatrixXd cov;   // 2n x 2n

    std::size_t modes() const {
        return static_cast<std::size_t>(mean.size() / 2);
    }
    /// det(2 cov); 1 for pure states.
    double purity_det() const;
    /// Smallest eigenvalue of cov + (i/2) Omega; nonnegative for physical states.
    double uncertainty_margin() const;
};

/// Omega = [[0, 1], [-1, 0]] in the (q, p) ordering.
Eigen::MatrixXd symplectic_form(std::size_t n);

GaussianState vacuum(std::size_t n);

/// Evolution under H = (i kappa / 2) sum_{m,n} A_mn (a_m^+ a_n^+ - a_m a_n)
/// for time t, with squeeze_r = kappa t. Each edge {m, n} contributes one
/// two-mode squeezing term of strength kappa A_mn; the Heisenberg equations are
/// dq/dt = kappa A q and dp/dt = -kappa A p.
struct EvolutionParams {
    double squeeze_r = 0.0;
    Eigen::MatrixXd adjacency;  // real symmetric
};

/// Symplectic transform diag(exp(rA), exp(-rA)). When A^2 = 1 the blocks are
/// cosh(r) 1 +- sinh(r) A; otherwise the Pade exponential is used.
Eigen::MatrixXd evolution_symplectic(const EvolutionParams &params);

/// Vacuum evolved by evolution_symplectic.
GaussianState evolve(const EvolutionParams &params);

GaussianState apply_symplectic(const GaussianState &state, const Eigen::MatrixXd &transform);

/// Quarter turn in phase space on every color-1 mode: q -> s p, p -> -s q
/// with s = quarter_turns (+1 or -1).
GaussianState rotate_color_class(const GaussianState &state, const Bicoloring &coloring, int quarter_turns);

/// Variances of the nullifiers n_i = p_i - sum_j T_ij q_j.
///
/// `variances` holds Var(n_i) / (1 + sum_j T_ij^2), the variance of the
/// unit-norm nullifier, so vacuum gives exactly 1/2 for any target.
/// `raw_variances` holds Var(n_i) itself.
struct NullifierReport {
    Eigen::MatrixXd target;
    Eigen::VectorXd variances;
    Eigen::VectorXd raw_variances;
    double max_variance = 0.0;
    double max_raw_variance = 0.0;
    std::optional<double> squeeze_r;
};

NullifierReport nullifier_variances(const GaussianState &state, const Eigen::MatrixXd &target,
                                    std::optional<double> squeeze_r = std::nullopt);

struct PhaseChoice {
    int quarter_turns = 1;
    int target_sign = 1;
    Eigen::MatrixXd signed_target;
    GaussianState state;  // after the rotation
    NullifierReport report;
    double candidate_max[4] = {0, 0, 0, 0};  // (+1,+), (+1,-), (-1,+), (-1,-)
};

/// Tries quarter_turns in {+1, -1} and target signs {+1, -1} and keeps the
/// combination with the smallest maximum nullifier variance. Earlier
/// candidates win ties (relative tolerance 1e-9), so (+1, +target) is preferred.
PhaseChoice best_phase_convention(const GaussianState &state, const Bicoloring &coloring,
                                  const Eigen::MatrixXd &target, std::optional<double> squeeze_r = std::nullopt);

struct ConditionedState {
    GaussianState state;            // remaining modes
    std::vector<std::size_t> kept;  // original index of each remaining mode
};

/// Ideal q-homodyne on `nodes`. Outcomes default to 0 and, when given, pair
/// with `nodes` in order; they shift the mean only.
ConditionedState measure_q(const GaussianState &state, std::span<const std::size_t> nodes,
                           std::span<const double> outcomes = {});

/// Indices of 0..n-1 not in `nodes`, ascending. Throws on out-of-range nodes.
std::vector<std::size_t> complement_of(std::size_t n, std::span<const std::size_t> nodes);

/// Deletes the listed rows and columns; remaining nodes keep their relative order.
PhysAdjacency ideal_graph_delete(const PhysAdjacency &adjacency, std::span<const std::size_t> nodes);

Eigen::MatrixXd principal_submatrix(const Eigen::MatrixXd &m, std::span<const std::size_t> keep);

/// Pure-state wavefunction exp(i q^T (V + iU) q / 2): V is the graph part, U the
/// (positive-definite) error part.
struct EffectiveGraph {
    Eigen::MatrixXd V;
    Eigen::MatrixXd U;
};

/// Throws a validation error unless |det(2 cov) - 1| <= 1e-6.
EffectiveGraph effective_graph(const GaussianState &state);

Eigen::MatrixXd covariance_of(const EffectiveGraph &graph);

}  // namespace cvcomb

#endif
