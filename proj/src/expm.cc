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

#include "cvcomb/expm.h"

#include <Eigen/LU>
#include <algorithm>
#include <cmath>

#include "cvcomb/error.h"

namespace cvcomb {

namespace {

constexpr double kTheta13 = 5.371920351148152;

constexpr double kPade13[] = {64764752532480000.0,
                              32382376266240000.0,
                              7771770303897600.0,
                              1187353796428800.0,
                              129060195264000.0,
                              10559470521600.0,
                              670442572800.0,
                              33522128640.0,
                              1323241920.0,
                              40840800.0,
                              960960.0,
                              16380.0,
                              182.0,
                              1.0};

}  // namespace

Eigen::MatrixXd expm(const Eigen::MatrixXd &a) {
    if (a.rows() != a.cols()) {
        throw_validation("not_square", "matrix exponential needs a square matrix");
    }
    const auto n = a.rows();
    if (n == 0) {
        return a;
    }
    const double norm1 = a.cwiseAbs().colwise().sum().maxCoeff();
    int squarings = 0;
    if (norm1 > kTheta13) {
        squarings = static_cast<int>(std::ceil(std::log2(norm1 / kTheta13)));
    }
    const Eigen::MatrixXd x = a / std::ldexp(1.0, squarings);

    const auto &b = kPade13;
    const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);
    const Eigen::MatrixXd x2 = x * x;
    const Eigen::MatrixXd x4 = x2 * x2;
    const Eigen::MatrixXd x6 = x4 * x2;
    Eigen::MatrixXd u = x * (x6 * (b[13] * x6 + b[11] * x4 + b[9] * x2) + b[7] * x6 + b[5] * x4 + b[3] * x2 + b[1] * id);
    Eigen::MatrixXd v = x6 * (b[12] * x6 + b[10] * x4 + b[8] * x2) + b[6] * x6 + b[4] * x4 + b[2] * x2 + b[0] * id;
    Eigen::MatrixXd r = (v - u).partialPivLu().solve(v + u);
    for (int k = 0; k < squarings; ++k) {
        r = r * r;
    }
    return r;
}

}  // namespace cvcomb
