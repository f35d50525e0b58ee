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

#include "cvcomb/hankel.h"

#include <algorithm>
#include <cstdlib>

namespace cvcomb {

namespace {

std::string pos_str(std::pair<std::size_t, std::size_t> p) {
    return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
}

}  // namespace

NotHankel::NotHankel(std::pair<std::size_t, std::size_t> a, std::pair<std::size_t, std::size_t> b)
    : Error(ErrorKind::kValidation, "not_hankel",
            "blocks " + pos_str(a) + " and " + pos_str(b) + " share a skew-diagonal but differ"),
      first(a),
      second(b) {
}

std::size_t HankelShorthand::nonzero_count() const {
    return static_cast<std::size_t>(
        std::count_if(entries.begin(), entries.end(), [](const ExactMatrix &e) { return (e.array() != 0).any(); }));
}

bool HankelShorthand::operator==(const HankelShorthand &other) const {
    if (block_side != other.block_side || entries.size() != other.entries.size()) {
        return false;
    }
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i] != other.entries[i]) {
            return false;
        }
    }
    return true;
}

HankelShorthand shorthand_of(const ExactMatrix &quarters, std::size_t block_side) {
    if (block_side != 1 && block_side != 2 && block_side != 4) {
        throw_config("bad_block_side", "block side must be 1, 2 or 4");
    }
    if (quarters.rows() != quarters.cols() || quarters.rows() == 0) {
        throw_validation("not_square", "Hankel analysis needs a nonempty square matrix");
    }
    const auto bs = static_cast<Eigen::Index>(block_side);
    if (quarters.rows() % bs != 0) {
        throw_validation("bad_block_side", "matrix side is not divisible by the block side");
    }
    const std::size_t nb = static_cast<std::size_t>(quarters.rows() / bs);
    auto blk = [&](std::size_t r, std::size_t c) {
        return quarters.block(static_cast<Eigen::Index>(r) * bs, static_cast<Eigen::Index>(c) * bs, bs, bs);
    };

    HankelShorthand out;
    out.block_side = block_side;
    out.entries.reserve(2 * nb - 1);
    // Top block row, then the right block column below the corner.
    for (std::size_t c = 0; c < nb; ++c) {
        out.entries.emplace_back(blk(0, c));
    }
    for (std::size_t r = 1; r < nb; ++r) {
        out.entries.emplace_back(blk(r, nb - 1));
    }
    for (std::size_t r = 1; r < nb; ++r) {
        for (std::size_t c = 0; c + 1 < nb; ++c) {
            std::size_t d = r + c;
            if (blk(r, c) != out.entries[d]) {
                std::pair<std::size_t, std::size_t> ref{0, d};
                if (d >= nb) {
                    ref = {d - (nb - 1), nb - 1};
                }
                throw NotHankel(ref, {r, c});
            }
        }
    }
    return out;
}

HankelShorthand shorthand_of(const PhysAdjacency &adjacency, std::size_t block_side) {
    return shorthand_of(adjacency.to_dense(), block_side);
}

ExactMatrix matrix_of(const HankelShorthand &shorthand) {
    const std::size_t len = shorthand.entries.size();
    if (len == 0 || len % 2 == 0) {
        throw_validation("bad_shorthand_length", "shorthand length must be 2N-1, got " + std::to_string(len));
    }
    const auto bs = static_cast<Eigen::Index>(shorthand.block_side);
    for (const auto &e : shorthand.entries) {
        if (e.rows() != bs || e.cols() != bs) {
            throw_validation("bad_block_side", "shorthand entry has the wrong block side");
        }
    }
    const std::size_t nb = shorthand.n_blocks();
    const auto side = static_cast<Eigen::Index>(nb) * bs;
    ExactMatrix out(side, side);
    for (std::size_t r = 0; r < nb; ++r) {
        for (std::size_t c = 0; c < nb; ++c) {
            out.block(static_cast<Eigen::Index>(r) * bs, static_cast<Eigen::Index>(c) * bs, bs, bs) =
                shorthand.entries[r + c];
        }
    }
    return out;
}

std::string entry_label(const ExactMatrix &entry) {
    if (entry.rows() == 1) {
        return entry(0, 0) == 0 ? "0" : std::to_string(entry(0, 0)) + "/4";
    }
    return block_label(BlockWeight(entry));
}

int PumpLine::z_sign() const {
    bool z_flipped = (y_phase_deg == 180) != (polarization == Polarization::kMinus45);
    return z_flipped ? -1 : 1;
}

std::string PumpSpectrum::sign_convention() {
    return "zphase=yphase+(pol==-45?180:0)";
}

PumpSpectrum compile_pump(const HankelShorthand &shorthand) {
    if (shorthand.block_side != 2) {
        throw_config("bad_block_side", "pump compilation needs a 2x2 block shorthand");
    }
    PumpSpectrum out;
    out.n_qumodes = 2 * shorthand.n_blocks();
    std::int64_t common = 0;
    for (std::size_t d = 0; d < shorthand.entries.size(); ++d) {
        const ExactMatrix &e = shorthand.entries[d];
        if ((e.array() == 0).all()) {
            continue;
        }
        auto scaled = as_scaled_projector2(BlockWeight(e));
        if (!scaled) {
            throw_validation("not_compilable",
                             "entry " + std::to_string(d) + " (" + entry_label(e) + ") is not a multiple of pi+ or pi-");
        }
        auto [pattern, c] = *scaled;
        if (common == 0) {
            common = std::abs(c);
        } else if (std::abs(c) != common) {
            throw_validation("nonuniform_magnitude", "entry " + std::to_string(d) + " has magnitude " +
                                                         std::to_string(std::abs(c)) + "/4, expected " +
                                                         std::to_string(common) + "/4");
        }
        PumpLine line;
        line.frequency_index = static_cast<std::int64_t>(d);
        line.amplitude = 1.0;
        line.polarization = pattern == Pattern::kPlus ? Polarization::kPlus45 : Polarization::kMinus45;
        bool y_negative = (pattern == Pattern::kMinus) != (c < 0);
        line.y_phase_deg = y_negative ? 180 : 0;
        out.lines.push_back(line);
    }
    if (!out.lines.empty()) {
        out.bandwidth_span = out.lines.back().frequency_index - out.lines.front().frequency_index;
    }
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> coupled_pairs(const PumpLine &line, std::size_t n_blocks) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    const std::int64_t d = line.frequency_index;
    const auto nb = static_cast<std::int64_t>(n_blocks);
    for (std::int64_t m = std::max<std::int64_t>(0, d - (nb - 1)); 2 * m <= d && m < nb; ++m) {
        out.emplace_back(static_cast<std::size_t>(m), static_cast<std::size_t>(d - m));
    }
    return out;
}

std::vector<ScalingRow> scaling_report(const std::vector<int> &Ms) {
    std::vector<ScalingRow> rows;
    for (int M : Ms) {
        SuperAdjacency super = build_torus_supergraph(M);
        PhysAdjacency phys = expand(super);
        Renumbering renum = renumber_to_block_hankel(phys, M);
        PumpSpectrum pump = compile_pump(shorthand_of(renum.renumbered, 2));
        ScalingRow row;
        row.M = M;
        row.macronodes = super.n_macro();
        row.physical_modes = phys.size();
        row.superedges = super.edge_count();
        row.physical_edges = phys.edge_count();
        row.pump_lines = pump.lines.size();
        row.bandwidth_span = pump.bandwidth_span;
        row.comb_lines = pump.n_qumodes / 2;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace cvcomb
