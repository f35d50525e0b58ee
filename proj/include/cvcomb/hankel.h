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

#ifndef CVCOMB_HANKEL_H
#define CVCOMB_HANKEL_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cvcomb/error.h"
#include "cvcomb/lattice.h"

namespace cvcomb {

/// Vector encoding of a (block-)Hankel matrix: the blocks along the top block
/// row followed by those down the right block column. Entry d is the constant
/// block on block skew-diagonal d; the top-right block sits at corner_index().
struct HankelShorthand {
    std::size_t block_side = 1;        // 1, 2 or 4
    std::vector<ExactMatrix> entries;  // quarters, block_side x block_side each

    std::size_t n_blocks() const {
        return (entries.size() + 1) / 2;
    }
    std::size_t corner_index() const {
        return n_blocks() - 1;
    }
    std::size_t nonzero_count() const;
    bool operator==(const HankelShorthand &other) const;
};

/// Thrown by shorthand_of. Positions are (block_row, block_col) pairs lying on
/// the same block skew-diagonal with different contents.
class NotHankel : public Error {
   public:
    NotHankel(std::pair<std::size_t, std::size_t> first, std::pair<std::size_t, std::size_t> second);

    std::pair<std::size_t, std::size_t> first;
    std::pair<std::size_t, std::size_t> second;
};

HankelShorthand shorthand_of(const ExactMatrix &quarters, std::size_t block_side);
HankelShorthand shorthand_of(const PhysAdjacency &adjacency, std::size_t block_side);

/// Exact inverse of shorthand_of.
ExactMatrix matrix_of(const HankelShorthand &shorthand);

/// Token for one shorthand entry: "k/4" for scalars, block_label otherwise.
std::string entry_label(const ExactMatrix &entry);

enum class Polarization { kPlus45, kMinus45 };

/// One pump frequency. It couples the comb frequencies m, n with
/// m + n = frequency_index (indices count 2x2 blocks, one Z/Y polarization pair
/// per comb line).
struct PumpLine {
    std::int64_t frequency_index = 0;
    double amplitude = 0.0;
    Polarization polarization = Polarization::kPlus45;
    int y_phase_deg = 0;  // 0 or 180

    /// Sign of the Z component; the Y component sign follows from polarization.
    int z_sign() const;
    bool operator==(const PumpLine &) const = default;
};

struct PumpSpectrum {
    std::vector<PumpLine> lines;  // sorted by frequency_index
    std::size_t n_qumodes = 0;    // physical modes
    std::int64_t bandwidth_span = 0;

    /// The line's Y phase is absolute; its Z phase equals the Y phase at +45
    /// degrees and the Y phase plus 180 at -45 degrees. A line at +45/0 is pi+,
    /// -45/180 is pi-, and the remaining two combinations are their negatives.
    static std::string sign_convention();
};

/// One pump line per nonzero entry. Every nonzero block must be c*pi+ or c*pi-
/// with the same |c| throughout.
PumpSpectrum compile_pump(const HankelShorthand &shorthand);

/// Comb-frequency pairs (m <= n) coupled by a line, restricted to 0..n_blocks-1.
std::vector<std::pair<std::size_t, std::size_t>> coupled_pairs(const PumpLine &line, std::size_t n_blocks);

struct ScalingRow {
    int M = 0;
    std::size_t macronodes = 0;  // N = M^2
    std::size_t physical_modes = 0;
    std::size_t superedges = 0;
    std::size_t physical_edges = 0;
    std::size_t pump_lines = 0;
    std::int64_t bandwidth_span = 0;  // pump frequency span, FSR units
    std::size_t comb_lines = 0;       // comb frequencies the coupling bandwidth must cover
};

/// Builds, renumbers and compiles the torus lattice for each M.
std::vector<ScalingRow> scaling_report(const std::vector<int> &Ms);

}  // namespace cvcomb

#endif
