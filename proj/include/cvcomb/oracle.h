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

#ifndef CVCOMB_ORACLE_H
#define CVCOMB_ORACLE_H

#include <Eigen/Core>
#include <cstddef>

namespace cvcomb::oracle {

// Reference integrator for quadratic bosonic Hamiltonians. It shares no code
// with the closed-form evolution and starts from the mode-operator form
//     H = sum_mn G_mn a_m^+ a_n^+ + h.c.,
// rewritten in quadratures (a = (q + i p) / sqrt 2) as H = x^T K x / 2.

/// K for coefficient matrix G (symmetric part only matters), ordering (q, p).
Eigen::MatrixXd quadrature_hamiltonian(const Eigen::MatrixXcd &G);

struct Integration {
    Eigen::MatrixXd transform;  // x(t) = transform * x(0)
    std::size_t steps = 0;
    double last_change = 0.0;  // max |difference| between the last two refinements
};

/// Solves dS/dt = Omega K S, S(0) = 1, over [0, t] with classical RK4, halving
/// the step until two successive results differ by at most tol (relative to
/// max(1, max |S|)).
Integration integrate(const Eigen::MatrixXd &K, double t, double tol = 1e-12);

/// Convenience for coupling matrix A with kappa = 1: G = i A / 2, t = r.
Integration evolve_adjacency(const Eigen::MatrixXd &A, double r, double tol = 1e-12);

}  // namespace cvcomb::oracle

#endif
