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

#include "cvcomb/io.h"

#include <cinttypes>
#include <cstdio>
#include <sstream>

#include "cvcomb/error.h"

namespace cvcomb {

namespace {

std::string quarters_text(std::int64_t q) {
    return std::to_string(q) + "/4";
}

}  // namespace

std::string format_double(double value) {
    if (value == 0.0) {
        return "0";
    }
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

std::string text_hash(const std::string &text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016" PRIx64, h);
    return buf;
}

std::string matrix_hash(const Eigen::MatrixXd &m) {
    std::string text = std::to_string(m.rows()) + "x" + std::to_string(m.cols());
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            text += " " + format_double(m(r, c));
        }
    }
    return text_hash(text);
}

std::string write_triplets(const PhysAdjacency &adjacency) {
    std::ostringstream out;
    out << "n=" << adjacency.size() << " denom=4\n";
    for (const auto &t : adjacency.triplets()) {
        out << t.i << ' ' << t.j << ' ' << quarters_text(t.quarters) << '\n';
    }
    return out.str();
}

PhysAdjacency read_triplets(const std::string &text) {
    std::istringstream in(text);
    std::string header;
    if (!std::getline(in, header)) {
        throw_validation("bad_triplets", "missing header");
    }
    std::size_t n = 0;
    char tail[16] = {0};
    if (std::sscanf(header.c_str(), "n=%zu denom=%15s", &n, tail) != 2 || std::string(tail) != "4") {
        throw_validation("bad_triplets", "header must read 'n=<count> denom=4'");
    }
    std::vector<Triplet> triplets;
    std::string line;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        Triplet t;
        long long q = 0;
        int consumed = 0;
        if (std::sscanf(line.c_str(), "%zu %zu %lld/4%n", &t.i, &t.j, &q, &consumed) != 3 ||
            static_cast<std::size_t>(consumed) != line.size()) {
            throw_validation("bad_triplets", "line " + std::to_string(line_no) + " is not 'i j k/4'");
        }
        if (t.i >= n || t.j >= n) {
            throw_validation("bad_triplets", "line " + std::to_string(line_no) + " index out of range");
        }
        t.quarters = q;
        triplets.push_back(t);
    }
    return PhysAdjacency::from_triplets(n, triplets);
}

std::string write_dot(const PhysAdjacency &adjacency, const std::string &name) {
    std::ostringstream out;
    out << "graph " << name << " {\n";
    for (std::size_t k = 0; k < adjacency.size(); ++k) {
        out << "  " << k << ";\n";
    }
    for (const auto &t : adjacency.triplets()) {
        out << "  " << t.i << " -- " << t.j << " [label=\"" << quarters_text(t.quarters) << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

std::string write_super_triplets(const SuperAdjacency &super) {
    std::ostringstream out;
    out << "n=" << super.n_macro() << " denom=4 block_side=" << super.block_side() << '\n';
    for (const auto &[ij, w] : super.upper_blocks()) {
        out << ij.first << ' ' << ij.second << ' ' << block_label(w) << '\n';
    }
    return out.str();
}

std::string write_shorthand(const HankelShorthand &shorthand) {
    std::ostringstream out;
    out << "length=" << shorthand.entries.size() << " corner_index=" << shorthand.corner_index()
        << " block_side=" << shorthand.block_side << '\n';
    for (std::size_t d = 0; d < shorthand.entries.size(); ++d) {
        out << d << ' ' << entry_label(shorthand.entries[d]) << '\n';
    }
    return out.str();
}

std::string write_pump(const PumpSpectrum &spectrum) {
    std::ostringstream out;
    out << "n_qumodes=" << spectrum.n_qumodes << " block_side=2 sign_convention=" << PumpSpectrum::sign_convention()
        << '\n';
    for (const auto &line : spectrum.lines) {
        out << "d=" << line.frequency_index << " amp=" << format_double(line.amplitude)
            << " pol=" << (line.polarization == Polarization::kPlus45 ? "+45" : "-45") << " yphase=" << line.y_phase_deg
            << '\n';
    }
    return out.str();
}

std::string write_nullifier_table(const NullifierReport &report) {
    std::ostringstream out;
    out << "i variance\n";
    for (Eigen::Index i = 0; i < report.variances.size(); ++i) {
        out << i << ' ' << format_double(report.variances(i)) << '\n';
    }
    out << "r=" << (report.squeeze_r ? format_double(*report.squeeze_r) : "none")
        << " max=" << format_double(report.max_variance) << " target=" << matrix_hash(report.target) << '\n';
    return out.str();
}

std::string write_nullifier_records(const NullifierReport &report) {
    std::ostringstream out;
    for (Eigen::Index i = 0; i < report.variances.size(); ++i) {
        out << "mode=" << i << " variance=" << format_double(report.variances(i))
            << " raw_variance=" << format_double(report.raw_variances(i)) << '\n';
    }
    out << "summary r=" << (report.squeeze_r ? format_double(*report.squeeze_r) : "none")
        << " modes=" << report.variances.size() << " max=" << format_double(report.max_variance)
        << " max_raw=" << format_double(report.max_raw_variance) << " target=" << matrix_hash(report.target) << '\n';
    return out.str();
}

std::string write_matrix(const Eigen::MatrixXd &m) {
    std::ostringstream out;
    out << "rows=" << m.rows() << " cols=" << m.cols() << '\n';
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            out << (c ? " " : "") << format_double(m(r, c));
        }
        out << '\n';
    }
    return out.str();
}

std::string write_effective_graph(const EffectiveGraph &graph) {
    return "# V\n" + write_matrix(graph.V) + "# U\n" + write_matrix(graph.U);
}

std::string write_census(const GraphCensus &census) {
    std::ostringstream out;
    out << "nodes=" << census.nodes << " edges=" << census.edges << " components=" << census.components
        << " connected=" << (census.connected() ? "true" : "false") << " max_degree=" << census.max_degree
        << " cycle_rank=" << census.cycle_rank << " planar=" << (census.planar ? "true" : "false") << " uniform_weight=";
    if (census.uniform_magnitude) {
        out << quarters_text(*census.uniform_magnitude);
    } else {
        out << "no";
    }
    out << " degrees=";
    bool first = true;
    for (const auto &[d, count] : census.degree_count) {
        out << (first ? "" : ",") << d << ':' << count;
        first = false;
    }
    out << '\n';
    return out.str();
}

}  // namespace cvcomb
