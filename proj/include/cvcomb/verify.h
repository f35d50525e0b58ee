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

#ifndef CVCOMB_VERIFY_H
#define CVCOMB_VERIFY_H

#include <string>
#include <vector>

namespace cvcomb {

struct VerifyConfig {
    int M = 6;                        // lattice side for the structure and reduction checks
    std::vector<double> rs = {1, 2};  // squeezing values for the lattice reduction checks
    std::size_t keep_layer = 0;
    int x0 = 0;
    int y0 = 0;
};

inline constexpr int kCriterionCount = 9;

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    std::vector<std::string> details;
};

/// Runs acceptance criterion `id` (1..9). Library errors become a FAIL with the
/// error recorded; nothing here depends on timing.
CriterionResult run_criterion(int id, const VerifyConfig &config);

/// Detail blocks for every result, then one `PASS <id> <title>` or
/// `FAIL <id> <title>` line per result.
std::string render_report(const std::vector<CriterionResult> &results);

/// Criteria 1..9 rendered with render_report.
std::string verify_all(const VerifyConfig &config, bool *all_pass = nullptr);

}  // namespace cvcomb

#endif
