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

#ifndef CVCOMB_EXPM_H
#define CVCOMB_EXPM_H

#include <Eigen/Core>

namespace cvcomb {

/// Matrix exponential of a square real matrix: degree-13 Pade approximant with
/// scaling and squaring (Higham 2005). Relative accuracy near unit roundoff,
/// well inside 1e-12 for the matrices used here.
Eigen::MatrixXd expm(const Eigen::MatrixXd &a);

}  // namespace cvcomb

#endif
