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

#include "cvcomb/gaussian.h"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <algorithm>
#include <cmath>
#include <complex>

#include "cvcomb/error.h"
#include "cvcomb/expm.h"

namespace cvcomb {

namespace {

Eigen::MatrixXd symmetrized(const Eigen::MatrixXd &m) {
    return 0.5 * (m + m.transpose());
}

void require_symmetric(const Eigen::MatrixXd &a) {
    if (a.rows() != a.cols()) {
        throw_validation("not_square", "adjacency must be square");
    }
    if (!a.isApprox(a.transpose(), 0.0) && (a - a.transpose()).cwiseAbs().maxCoeff() > 0.0) {
        throw_validation("asymmetric", "adjacency must be symmetric");
    }
}

bool squares_to_identity(const Eigen::MatrixXd &a) {
    const auto n = a.rows();
    return ((a * a) - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff() <= 1e-12;
}

}  // namespace

double GaussianState::purity_det() const {
    if (cov.rows() == 0) {
        return 1.0;
    }
    Eigen::LLT<Eigen::MatrixXd> llt(2.0 * cov);
    if (llt.info() != Eigen::Success) {
        return 0.0;
    }
    double log_det = 2.0 * llt.matrixL().toDenseMatrix().diagonal().array().log().sum();
    return std::exp(log_det);
}

double GaussianState::uncertainty_margin() const {
    const std::size_t n = modes();
    if (n == 0) {
        return 0.0;
    }
    Eigen::MatrixXcd h = cov.cast<std::complex<double>>();
    h += std::complex<double>(0.0, 0.5) * symplectic_form(n).cast<std::complex<double>>();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

Eigen::MatrixXd symplectic_form(std::size_t n) {
    const auto k = static_cast<Eigen::Index>(n);
    Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(2 * k, 2 * k);
    omega.topRightCorner(k, k) = Eigen::MatrixXd::Identity(k, k);
    omega.bottomLeftCorner(k, k) = -Eigen::MatrixXd::Identity(k, k);
    return omega;
}

GaussianState vacuum(std::size_t n) {
    if (n < 1) {
        throw_config("no_modes", "vacuum needs at least one mode");
    }
    const auto k = static_cast<Eigen::Index>(2 * n);
    return GaussianState{Eigen::VectorXd::Zero(k), 0.5 * Eigen::MatrixXd::Identity(k, k)};
}

Eigen::MatrixXd evolution_symplectic(const EvolutionParams &params) {
    const Eigen::MatrixXd &a = params.adjacency;
    require_symmetric(a);
    if (params.squeeze_r < 0.0) {
        throw_config("negative_r", "squeeze_r must be nonnegative");
    }
    const auto n = a.rows();
    const double r = params.squeeze_r;
    Eigen::MatrixXd grow;
    Eigen::MatrixXd shrink;
    if (squares_to_identity(a)) {
        const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);
        grow = std::cosh(r) * id + std::sinh(r) * a;
        shrink = std::cosh(r) * id - std::sinh(r) * a;
    } else {
        grow = expm(r * a);
        shrink = expm(-r * a);
    }
    Eigen::MatrixXd s = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    s.topLeftCorner(n, n) = grow;
    s.bottomRightCorner(n, n) = shrink;
    return s;
}

GaussianState evolve(const EvolutionParams &params) {
    if (params.adjacency.rows() == 0) {
        throw_config("no_modes", "evolution needs at least one mode");
    }
    return apply_symplectic(vacuum(static_cast<std::size_t>(params.adjacency.rows())), evolution_symplectic(params));
}

GaussianState apply_symplectic(const GaussianState &state, const Eigen::MatrixXd &transform) {
    if (transform.rows() != state.cov.rows() || transform.cols() != state.cov.cols()) {
        throw_validation("dimension_mismatch", "transform and state dimensions differ");
    }
    return GaussianState{transform * state.mean, symmetrized(transform * state.cov * transform.transpose())};
}

GaussianState rotate_color_class(const GaussianState &state, const Bicoloring &coloring, int quarter_turns) {
    if (quarter_turns != 1 && quarter_turns != -1) {
        throw_config("bad_quarter_turns", "quarter_turns must be +1 or -1");
    }
    const std::size_t n = state.modes();
    if (coloring.color.size() != n) {
        throw_validation("bad_coloring", "coloring size does not match the mode count");
    }
    const auto k = static_cast<Eigen::Index>(n);
    Eigen::MatrixXd rot = Eigen::MatrixXd::Identity(2 * k, 2 * k);
    for (Eigen::Index m = 0; m < k; ++m) {
        auto c = coloring.color[static_cast<std::size_t>(m)];
        if (c > 1) {
            throw_validation("bad_coloring", "colors must be 0 or 1");
        }
        if (c == 1) {
            rot(m, m) = 0.0;
            rot(k + m, k + m) = 0.0;
            rot(m, k + m) = quarter_turns;
            rot(k + m, m) = -quarter_turns;
        }
    }
    return apply_symplectic(state, rot);
}

NullifierReport nullifier_variances(const GaussianState &state, const Eigen::MatrixXd &target,
                                    std::optional<double> squeeze_r) {
    const auto n = static_cast<Eigen::Index>(state.modes());
    if (target.rows() != n || target.cols() != n) {
        throw_validation("dimension_mismatch", "target adjacency does not match the mode count");
    }
    NullifierReport report;
    report.target = target;
    report.squeeze_r = squeeze_r;
    report.variances.resize(n);
    report.raw_variances.resize(n);
    // Row i of [-T, 1] is the coefficient vector of n_i.
    Eigen::MatrixXd coeff(n, 2 * n);
    coeff.leftCols(n) = -target;
    coeff.rightCols(n) = Eigen::MatrixXd::Identity(n, n);
    Eigen::MatrixXd weighted = coeff * state.cov;
    for (Eigen::Index i = 0; i < n; ++i) {
        double raw = weighted.row(i).dot(coeff.row(i));
        report.raw_variances(i) = raw;
        report.variances(i) = raw / (1.0 + target.row(i).squaredNorm());
    }
    if (n > 0) {
        report.max_variance = report.variances.maxCoeff();
        report.max_raw_variance = report.raw_variances.maxCoeff();
    }
    return report;
}

PhaseChoice best_phase_convention(const GaussianState &state, const Bicoloring &coloring,
                                  const Eigen::MatrixXd &target, std::optional<double> squeeze_r) {
    constexpr int kTurns[4] = {1, 1, -1, -1};
    constexpr int kSigns[4] = {1, -1, 1, -1};
    PhaseChoice best;
    bool have = false;
    double candidate_max[4];
    for (int c = 0; c < 4; ++c) {
        GaussianState rotated = rotate_color_class(state, coloring, kTurns[c]);
        Eigen::MatrixXd signed_target = kSigns[c] * target;
        NullifierReport report = nullifier_variances(rotated, signed_target, squeeze_r);
        candidate_max[c] = report.max_variance;
        if (!have || report.max_variance < best.report.max_variance * (1.0 - 1e-9)) {
            best.quarter_turns = kTurns[c];
            best.target_sign = kSigns[c];
            best.signed_target = std::move(signed_target);
            best.state = std::move(rotated);
            best.report = std::move(report);
            have = true;
        }
    }
    std::copy(std::begin(candidate_max), std::end(candidate_max), best.candidate_max);
    return best;
}

std::vector<std::size_t> complement_of(std::size_t n, std::span<const std::size_t> nodes) {
    std::vector<bool> drop(n, false);
    for (std::size_t k : nodes) {
        if (k >= n) {
            throw_config("index_out_of_range", "node " + std::to_string(k) + " out of range");
        }
        drop[k] = true;
    }
    std::vector<std::size_t> keep;
    for (std::size_t k = 0; k < n; ++k) {
        if (!drop[k]) {
            keep.push_back(k);
        }
    }
    return keep;
}

ConditionedState measure_q(const GaussianState &state, std::span<const std::size_t> nodes,
                           std::span<const double> outcomes) {
    const std::size_t n = state.modes();
    if (nodes.empty()) {
        throw_config("empty_measurement", "no nodes to measure");
    }
    if (!outcomes.empty() && outcomes.size() != nodes.size()) {
        throw_config("bad_outcomes", "outcome count does not match the node count");
    }
    std::vector<std::pair<std::size_t, double>> measured;
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        measured.emplace_back(nodes[k], outcomes.empty() ? 0.0 : outcomes[k]);
    }
    std::sort(measured.begin(), measured.end());
    for (std::size_t k = 0; k + 1 < measured.size(); ++k) {
        if (measured[k].first == measured[k + 1].first) {
            throw_config("duplicate_node", "node " + std::to_string(measured[k].first) + " listed twice");
        }
    }
    std::vector<std::size_t> sorted_nodes;
    for (const auto &m : measured) {
        sorted_nodes.push_back(m.first);
    }
    std::vector<std::size_t> keep = complement_of(n, sorted_nodes);

    // A: all quadratures of kept modes. B: q of measured modes.
    std::vector<Eigen::Index> a_idx;
    std::vector<Eigen::Index> b_idx;
    for (std::size_t k : keep) {
        a_idx.push_back(static_cast<Eigen::Index>(k));
    }
    for (std::size_t k : keep) {
        a_idx.push_back(static_cast<Eigen::Index>(n + k));
    }
    for (std::size_t k : sorted_nodes) {
        b_idx.push_back(static_cast<Eigen::Index>(k));
    }
    const auto na = static_cast<Eigen::Index>(a_idx.size());
    const auto nb = static_cast<Eigen::Index>(b_idx.size());
    Eigen::MatrixXd vaa(na, na), vab(na, nb), vbb(nb, nb);
    Eigen::VectorXd mu_a(na), delta(nb);
    for (Eigen::Index r = 0; r < na; ++r) {
        mu_a(r) = state.mean(a_idx[r]);
        for (Eigen::Index c = 0; c < na; ++c) {
            vaa(r, c) = state.cov(a_idx[r], a_idx[c]);
        }
        for (Eigen::Index c = 0; c < nb; ++c) {
            vab(r, c) = state.cov(a_idx[r], b_idx[c]);
        }
    }
    for (Eigen::Index r = 0; r < nb; ++r) {
        delta(r) = measured[static_cast<std::size_t>(r)].second - state.mean(b_idx[r]);
        for (Eigen::Index c = 0; c < nb; ++c) {
            vbb(r, c) = state.cov(b_idx[r], b_idx[c]);
        }
    }
    Eigen::LDLT<Eigen::MatrixXd> ldlt(vbb);
    if (ldlt.info() != Eigen::Success) {
        throw_validation("singular_measurement", "measured q block is singular");
    }
    Eigen::MatrixXd gain = ldlt.solve(vab.transpose()).transpose();  // V_AB V_BB^-1

    ConditionedState out;
    out.kept = std::move(keep);
    out.state.mean = mu_a + gain * delta;
    out.state.cov = symmetrized(vaa - gain * vab.transpose());
    return out;
}

PhysAdjacency ideal_graph_delete(const PhysAdjacency &adjacency, std::span<const std::size_t> nodes) {
    std::vector<std::size_t> keep = complement_of(adjacency.size(), nodes);
    std::vector<std::size_t> new_index(adjacency.size(), adjacency.size());
    for (std::size_t k = 0; k < keep.size(); ++k) {
        new_index[keep[k]] = k;
    }
    std::vector<Triplet> triplets;
    for (const auto &t : adjacency.triplets()) {
        if (new_index[t.i] < keep.size() && new_index[t.j] < keep.size()) {
            triplets.push_back({new_index[t.i], new_index[t.j], t.quarters});
        }
    }
    return PhysAdjacency::from_triplets(keep.size(), triplets);
}

Eigen::MatrixXd principal_submatrix(const Eigen::MatrixXd &m, std::span<const std::size_t> keep) {
    const auto k = static_cast<Eigen::Index>(keep.size());
    Eigen::MatrixXd out(k, k);
    for (Eigen::Index r = 0; r < k; ++r) {
        for (Eigen::Index c = 0; c < k; ++c) {
            out(r, c) = m(static_cast<Eigen::Index>(keep[static_cast<std::size_t>(r)]),
                          static_cast<Eigen::Index>(keep[static_cast<std::size_t>(c)]));
        }
    }
    return out;
}

EffectiveGraph effective_graph(const GaussianState &state) {
    const auto n = static_cast<Eigen::Index>(state.modes());
    if (n == 0) {
        return EffectiveGraph{};
    }
    double purity = state.purity_det();
    if (std::abs(purity - 1.0) > 1e-6) {
        throw_validation("mixed_state", "effective graph needs a pure state, det(2 cov) = " + std::to_string(purity));
    }
    const Eigen::MatrixXd sqq = state.cov.topLeftCorner(n, n);
    const Eigen::MatrixXd spq = state.cov.bottomLeftCorner(n, n);
    Eigen::LDLT<Eigen::MatrixXd> ldlt(sqq);
    Eigen::MatrixXd sqq_inv = ldlt.solve(Eigen::MatrixXd::Identity(n, n));
    EffectiveGraph g;
    g.U = symmetrized(0.5 * sqq_inv);
    g.V = symmetrized(spq * sqq_inv);
    return g;
}

Eigen::MatrixXd covariance_of(const EffectiveGraph &graph) {
    const auto n = graph.U.rows();
    Eigen::MatrixXd u_inv = graph.U.ldlt().solve(Eigen::MatrixXd::Identity(n, n));
    Eigen::MatrixXd cov(2 * n, 2 * n);
    cov.topLeftCorner(n, n) = 0.5 * u_inv;
    cov.topRightCorner(n, n) = 0.5 * u_inv * graph.V;
    cov.bottomLeftCorner(n, n) = 0.5 * graph.V * u_inv;
    cov.bottomRightCorner(n, n) = 0.5 * (graph.U + graph.V * u_inv * graph.V);
    return cov;
}

}  // namespace cvcomb
