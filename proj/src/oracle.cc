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

#include "cvcomb/oracle.h"

#include <algorithm>
#include <complex>
#include <stdexcept>

namespace cvcomb::oracle {

Eigen::MatrixXd quadrature_hamiltonian(const Eigen::MatrixXcd &G) {
    const auto n = G.rows();
    const Eigen::MatrixXd re = G.real();
    const Eigen::MatrixXd im = G.imag();
    // G a+a+ + G* a a = Re G (qq - pp) + Im G (qp + pq) per (m, n).
    Eigen::MatrixXd K(2 * n, 2 * n);
    K.topLeftCorner(n, n) = re + re.transpose();
    K.bottomRightCorner(n, n) = -(re + re.transpose());
    K.topRightCorner(n, n) = im + im.transpose();
    K.bottomLeftCorner(n, n) = im + im.transpose();
    return K;
}

namespace {

Eigen::MatrixXd rk4(const Eigen::MatrixXd &generator, double t, std::size_t steps) {
    const auto dim = generator.rows();
    const double h = t / static_cast<double>(steps);
    Eigen::MatrixXd s = Eigen::MatrixXd::Identity(dim, dim);
    for (std::size_t k = 0; k < steps; ++k) {
        Eigen::MatrixXd k1 = generator * s;
        Eigen::MatrixXd k2 = generator * (s + 0.5 * h * k1);
        Eigen::MatrixXd k3 = generator * (s + 0.5 * h * k2);
        Eigen::MatrixXd k4 = generator * (s + h * k3);
        s += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    return s;
}

}  // namespace

Integration integrate(const Eigen::MatrixXd &K, double t, double tol) {
    const auto dim = K.rows();
    if (dim % 2 != 0 || K.cols() != dim) {
        throw std::invalid_argument("oracle: K must be square with even side");
    }
    const auto n = dim / 2;
    Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(dim, dim);
    for (Eigen::Index i = 0; i < n; ++i) {
        omega(i, n + i) = 1.0;
        omega(n + i, i) = -1.0;
    }
    const Eigen::MatrixXd generator = omega * K;

    std::size_t steps = 16;
    Eigen::MatrixXd coarse = rk4(generator, t, steps);
    while (true) {
        Eigen::MatrixXd fine = rk4(generator, t, 2 * steps);
        steps *= 2;
        double scale = std::max(1.0, fine.cwiseAbs().maxCoeff());
        double change = (fine - coarse).cwiseAbs().maxCoeff();
        if (change <= tol * scale || steps >= (std::size_t{1} << 22)) {
            return Integration{fine, steps, change};
        }
        coarse = std::move(fine);
    }
}

Integration evolve_adjacency(const Eigen::MatrixXd &A, double r, double tol) {
    Eigen::MatrixXcd G = std::complex<double>(0.0, 0.5) * A.cast<std::complex<double>>();
    return integrate(quadrature_hamiltonian(G), r, tol);
}

}  // namespace cvcomb::oracle
