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

#include "cvcomb/lattice.h"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

#include "cvcomb/error.h"

namespace cvcomb {

namespace {

void validate_torus_M(int M) {
    if (M % 2 != 0) {
        throw_config("odd_M", "M must be even, got " + std::to_string(M));
    }
    if (M < 4) {
        throw_config("M_too_small", "M must be at least 4 so that v = M^2-2M-3 >= 0, got " + std::to_string(M));
    }
}

ExactMatrix sign_pattern(Pattern pattern) {
    ExactMatrix m(2, 2);
    if (pattern == Pattern::kPlus) {
        m << 1, 1, 1, 1;
    } else {
        m << 1, -1, -1, 1;
    }
    return m;
}

}  // namespace

Rational Rational::of(std::int64_t num, std::int64_t den) {
    if (den == 0) {
        throw_invariant("zero_denominator", "rational with zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    std::int64_t g = std::gcd(num, den);
    if (g == 0) {
        g = 1;
    }
    return Rational{num / g, den / g};
}

std::string Rational::str() const {
    if (den == 1) {
        return std::to_string(num);
    }
    return std::to_string(num) + "/" + std::to_string(den);
}

BlockWeight::BlockWeight(ExactMatrix quarters) : quarters_(std::move(quarters)) {
    if (quarters_.rows() != quarters_.cols() || (quarters_.rows() != 2 && quarters_.rows() != 4)) {
        throw_validation("bad_block_side", "block weights must be 2x2 or 4x4");
    }
}

BlockWeight BlockWeight::zero(std::size_t side) {
    auto s = static_cast<Eigen::Index>(side);
    return BlockWeight(ExactMatrix::Zero(s, s));
}

bool BlockWeight::is_zero() const {
    return quarters_.size() == 0 || (quarters_.array() == 0).all();
}

bool BlockWeight::is_symmetric() const {
    return quarters_ == quarters_.transpose();
}

BlockWeight BlockWeight::transposed() const {
    return BlockWeight(ExactMatrix(quarters_.transpose()));
}

BlockWeight BlockWeight::operator-() const {
    return BlockWeight(ExactMatrix(-quarters_));
}

bool BlockWeight::operator==(const BlockWeight &other) const {
    return quarters_.rows() == other.quarters_.rows() && quarters_ == other.quarters_;
}

BlockWeight projector2(Pattern pattern) {
    return BlockWeight(ExactMatrix(2 * sign_pattern(pattern)));
}

BlockWeight kron(const BlockWeight &a, const BlockWeight &b) {
    auto na = a.quarters().rows();
    auto nb = b.quarters().rows();
    if (na * nb != 4) {
        throw_validation("bad_block_side", "kron is defined here only for 2x2 factors");
    }
    ExactMatrix out(4, 4);
    for (Eigen::Index r = 0; r < 4; ++r) {
        for (Eigen::Index c = 0; c < 4; ++c) {
            // (x/4)(y/4) = (x*y/4)/4
            std::int64_t p = a.quarters()(r / nb, c / nb) * b.quarters()(r % nb, c % nb);
            if (p % kQuarter != 0) {
                throw_validation("off_grid", "Kronecker product leaves the quarter grid");
            }
            out(r, c) = p / kQuarter;
        }
    }
    return BlockWeight(std::move(out));
}

BlockWeight projector4(int j) {
    if (j < 0 || j > 3) {
        throw_config("bad_projector_index", "projector index must be in 0..3, got " + std::to_string(j));
    }
    // Bit 1 of j selects the first tensor factor, bit 0 the second.
    Pattern first = (j & 2) ? Pattern::kMinus : Pattern::kPlus;
    Pattern second = (j & 1) ? Pattern::kMinus : Pattern::kPlus;
    return kron(projector2(first), projector2(second));
}

std::optional<std::pair<Pattern, std::int64_t>> as_scaled_projector2(const BlockWeight &weight) {
    if (weight.side() != 2 || weight.is_zero()) {
        return std::nullopt;
    }
    const ExactMatrix &q = weight.quarters();
    std::int64_t c = q(0, 0);
    if (c == 0 || q(1, 1) != c || q(0, 1) != q(1, 0)) {
        return std::nullopt;
    }
    if (q(0, 1) == c) {
        return std::make_pair(Pattern::kPlus, c);
    }
    if (q(0, 1) == -c) {
        return std::make_pair(Pattern::kMinus, c);
    }
    return std::nullopt;
}

namespace {

struct NamedBlock {
    const char *name;
    BlockWeight weight;
};

const std::vector<NamedBlock> &named_blocks() {
    static const std::vector<NamedBlock> table = [] {
        std::vector<NamedBlock> t;
        for (int j = 0; j < 4; ++j) {
            static const char *names[] = {"P0", "P1", "P2", "P3"};
            t.push_back({names[j], projector4(j)});
        }
        t.push_back({"pi+", projector2(Pattern::kPlus)});
        t.push_back({"pi-", projector2(Pattern::kMinus)});
        t.push_back({"pi+/2", BlockWeight(sign_pattern(Pattern::kPlus))});
        t.push_back({"pi-/2", BlockWeight(sign_pattern(Pattern::kMinus))});
        return t;
    }();
    return table;
}

}  // namespace

std::string block_label(const BlockWeight &weight) {
    if (weight.is_zero()) {
        return "0";
    }
    for (const auto &named : named_blocks()) {
        if (named.weight == weight) {
            return named.name;
        }
        if (named.weight == -weight) {
            return std::string("-") + named.name;
        }
    }
    std::ostringstream out;
    out << "[";
    const ExactMatrix &q = weight.quarters();
    for (Eigen::Index r = 0; r < q.rows(); ++r) {
        for (Eigen::Index c = 0; c < q.cols(); ++c) {
            out << q(r, c) << (c + 1 < q.cols() ? "," : "");
        }
        out << (r + 1 < q.rows() ? ";" : "");
    }
    out << "]/4";
    return out.str();
}

BlockWeight parse_block_label(const std::string &label, std::size_t side) {
    if (label == "0") {
        return BlockWeight::zero(side);
    }
    bool negate = !label.empty() && label[0] == '-';
    std::string body = negate ? label.substr(1) : label;
    for (const auto &named : named_blocks()) {
        if (body == named.name) {
            if (named.weight.side() != side) {
                break;
            }
            return negate ? -named.weight : named.weight;
        }
    }
    if (!negate && label.size() > 4 && label.front() == '[' && label.ends_with("]/4")) {
        std::string inner = label.substr(1, label.size() - 4);
        for (char &ch : inner) {
            if (ch == ',' || ch == ';') {
                ch = ' ';
            }
        }
        std::istringstream in(inner);
        auto s = static_cast<Eigen::Index>(side);
        ExactMatrix q(s, s);
        for (Eigen::Index r = 0; r < s; ++r) {
            for (Eigen::Index c = 0; c < s; ++c) {
                if (!(in >> q(r, c))) {
                    throw_validation("bad_block_label", "cannot parse block '" + label + "'");
                }
            }
        }
        std::string rest;
        if (in >> rest) {
            throw_validation("bad_block_label", "trailing entries in block '" + label + "'");
        }
        return BlockWeight(std::move(q));
    }
    throw_validation("bad_block_label", "unknown block label '" + label + "' for side " + std::to_string(side));
}

SuperAdjacency::SuperAdjacency(std::size_t n_macro, std::size_t block_side, const std::vector<SuperEdge> &edges)
    : n_macro_(n_macro), block_side_(block_side) {
    if (n_macro == 0) {
        throw_config("empty_graph", "a supergraph needs at least one macronode");
    }
    if (block_side != 2 && block_side != 4) {
        throw_config("bad_block_side", "block side must be 2 or 4");
    }
    for (const auto &e : edges) {
        if (e.i >= n_macro || e.j >= n_macro) {
            throw_validation("index_out_of_range", "superedge endpoint out of range");
        }
        if (e.i == e.j) {
            throw_validation("self_loop", "supergraph diagonal blocks must be zero");
        }
        if (e.weight.side() != block_side) {
            throw_validation("bad_block_side", "superedge block has the wrong side");
        }
        if (e.weight.is_zero()) {
            continue;
        }
        auto key = std::minmax(e.i, e.j);
        BlockWeight w = e.i < e.j ? e.weight : e.weight.transposed();
        if (!upper_.emplace(key, w).second) {
            throw_validation("duplicate_edge", "superedge listed twice");
        }
    }
}

BlockWeight SuperAdjacency::block(std::size_t i, std::size_t j) const {
    auto it = upper_.find(std::minmax(i, j));
    if (it == upper_.end()) {
        return BlockWeight::zero(block_side_);
    }
    return i < j ? it->second : it->second.transposed();
}

std::size_t SuperAdjacency::degree(std::size_t i) const {
    std::size_t d = 0;
    for (const auto &[key, w] : upper_) {
        d += (key.first == i || key.second == i) ? 1 : 0;
    }
    return d;
}

PhysAdjacency PhysAdjacency::from_dense(const ExactMatrix &quarters) {
    if (quarters.rows() != quarters.cols()) {
        throw_validation("not_square", "adjacency must be square");
    }
    if (quarters != quarters.transpose()) {
        throw_validation("asymmetric", "adjacency must be symmetric");
    }
    PhysAdjacency out;
    out.rows_.resize(static_cast<std::size_t>(quarters.rows()));
    for (Eigen::Index r = 0; r < quarters.rows(); ++r) {
        for (Eigen::Index c = 0; c < quarters.cols(); ++c) {
            if (quarters(r, c) != 0) {
                out.rows_[static_cast<std::size_t>(r)].push_back({static_cast<std::size_t>(c), quarters(r, c)});
            }
        }
    }
    return out;
}

PhysAdjacency PhysAdjacency::from_triplets(std::size_t n, const std::vector<Triplet> &triplets) {
    std::map<std::pair<std::size_t, std::size_t>, std::int64_t> cells;
    for (const auto &t : triplets) {
        if (t.i >= n || t.j >= n) {
            throw_validation("index_out_of_range", "triplet index out of range");
        }
        if (t.quarters == 0) {
            continue;
        }
        if (!cells.emplace(std::minmax(t.i, t.j), t.quarters).second) {
            throw_validation("duplicate_entry", "entry (" + std::to_string(t.i) + "," + std::to_string(t.j) + ") given twice");
        }
    }
    PhysAdjacency out;
    out.rows_.resize(n);
    for (const auto &[key, q] : cells) {
        out.rows_[key.first].push_back({key.second, q});
        if (key.first != key.second) {
            out.rows_[key.second].push_back({key.first, q});
        }
    }
    for (auto &row : out.rows_) {
        std::sort(row.begin(), row.end(), [](const Entry &a, const Entry &b) { return a.col < b.col; });
    }
    return out;
}

std::int64_t PhysAdjacency::at(std::size_t i, std::size_t j) const {
    const auto &row = rows_.at(i);
    auto it = std::lower_bound(row.begin(), row.end(), j, [](const Entry &e, std::size_t c) { return e.col < c; });
    return (it != row.end() && it->col == j) ? it->quarters : 0;
}

std::size_t PhysAdjacency::degree(std::size_t i) const {
    std::size_t d = 0;
    for (const auto &e : rows_.at(i)) {
        d += e.col != i ? 1 : 0;
    }
    return d;
}

std::size_t PhysAdjacency::edge_count() const {
    std::size_t twice = 0;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        twice += degree(i);
    }
    return twice / 2;
}

bool PhysAdjacency::has_self_loops() const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (at(i, i) != 0) {
            return true;
        }
    }
    return false;
}

ExactMatrix PhysAdjacency::to_dense() const {
    auto n = static_cast<Eigen::Index>(rows_.size());
    ExactMatrix out = ExactMatrix::Zero(n, n);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        for (const auto &e : rows_[i]) {
            out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(e.col)) = e.quarters;
        }
    }
    return out;
}

Eigen::MatrixXd PhysAdjacency::to_real() const {
    return to_dense().cast<double>() / static_cast<double>(kQuarter);
}

PhysAdjacency PhysAdjacency::permuted(std::span<const std::size_t> new_of_old) const {
    if (new_of_old.size() != rows_.size()) {
        throw_validation("bad_permutation", "permutation size does not match adjacency");
    }
    std::vector<Triplet> out;
    for (const auto &t : triplets()) {
        out.push_back({new_of_old[t.i], new_of_old[t.j], t.quarters});
    }
    return from_triplets(rows_.size(), out);
}

std::vector<Triplet> PhysAdjacency::triplets() const {
    std::vector<Triplet> out;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        for (const auto &e : rows_[i]) {
            if (e.col >= i) {
                out.push_back({i, e.col, e.quarters});
            }
        }
    }
    return out;
}

std::vector<BlockWeight> torus_block_shorthand(int M) {
    validate_torus_M(M);
    const std::size_t u = static_cast<std::size_t>(M - 1);
    const std::size_t v = static_cast<std::size_t>(M * M - 2 * M - 3);
    const BlockWeight zero = BlockWeight::zero(4);

    std::vector<BlockWeight> seq;
    auto zeros = [&](std::size_t k) { seq.insert(seq.end(), k, zero); };
    auto half = [&](const BlockWeight &last_projector) {
        zeros(u);
        seq.push_back(projector4(1));
        zeros(v);
        seq.push_back(projector4(0));
        zeros(u);
        seq.push_back(last_projector);
        zeros(1);
    };
    half(projector4(3));
    seq.push_back(projector4(2));
    half(-projector4(3));

    if (seq.size() != static_cast<std::size_t>(2 * M * M - 1)) {
        throw_invariant("bad_shorthand_length", "torus shorthand has the wrong length");
    }
    return seq;
}

SuperAdjacency build_torus_supergraph(int M) {
    auto shorthand = torus_block_shorthand(M);
    const std::size_t n = static_cast<std::size_t>(M) * static_cast<std::size_t>(M);
    std::vector<SuperEdge> edges;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const BlockWeight &w = shorthand[i + j];
            if (!w.is_zero()) {
                edges.push_back({i, j, w});
            }
        }
    }
    return SuperAdjacency(n, 4, edges);
}

SuperAdjacency build_ring_supergraph(int n_macro) {
    if (n_macro % 2 != 0) {
        throw_config("odd_ring", "an odd ring cannot alternate pi+ and pi-, got " + std::to_string(n_macro));
    }
    if (n_macro < 4) {
        throw_config("ring_too_small", "ring needs at least 4 macronodes, got " + std::to_string(n_macro));
    }
    auto n = static_cast<std::size_t>(n_macro);
    std::vector<SuperEdge> edges;
    for (std::size_t k = 0; k < n; ++k) {
        Pattern p = (k % 2 == 0) ? Pattern::kPlus : Pattern::kMinus;
        edges.push_back({k, (k + 1) % n, projector2(p)});
    }
    return SuperAdjacency(n, 2, edges);
}

PhysAdjacency expand(const SuperAdjacency &super) {
    const std::size_t bs = super.block_side();
    std::vector<Triplet> triplets;
    for (const auto &[key, w] : super.upper_blocks()) {
        for (std::size_t a = 0; a < bs; ++a) {
            for (std::size_t b = 0; b < bs; ++b) {
                std::int64_t q = w.quarters()(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b));
                if (q != 0) {
                    triplets.push_back({key.first * bs + a, key.second * bs + b, q});
                }
            }
        }
    }
    return PhysAdjacency::from_triplets(super.n_macro() * bs, triplets);
}

OrthogonalityReport check_orthogonal(const PhysAdjacency &adjacency) {
    const std::size_t n = adjacency.size();
    if (n == 0) {
        throw_validation("empty_graph", "orthogonality of an empty adjacency is not defined");
    }
    // Products of two quarters live on the 1/16 grid.
    const std::int64_t unit = kQuarter * kQuarter;
    OrthogonalityReport report;
    report.has_self_loops = adjacency.has_self_loops();
    std::int64_t worst = 0;
    std::vector<std::int64_t> acc(n, 0);
    std::vector<std::size_t> touched;
    for (std::size_t j = 0; j < n; ++j) {
        touched.clear();
        for (const auto &jl : adjacency.row(j)) {
            for (const auto &lk : adjacency.row(jl.col)) {
                if (acc[lk.col] == 0) {
                    touched.push_back(lk.col);
                }
                acc[lk.col] += jl.quarters * lk.quarters;
            }
        }
        // The diagonal must be visited even when no 2-path returns to j.
        touched.push_back(j);
        std::sort(touched.begin(), touched.end());
        touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
        for (std::size_t k : touched) {
            std::int64_t dev = std::abs(acc[k] - (j == k ? unit : 0));
            if (dev > worst) {
                worst = dev;
                report.witness = std::make_pair(j, k);
            }
            acc[k] = 0;
        }
    }
    report.worst_deviation = Rational::of(worst, unit);
    report.is_orthogonal = worst == 0;
    return report;
}

Rational two_path_weight(const PhysAdjacency &adjacency, std::size_t j, std::size_t k) {
    if (j >= adjacency.size() || k >= adjacency.size()) {
        throw_config("index_out_of_range", "node index out of range");
    }
    std::int64_t sum = 0;
    for (const auto &jl : adjacency.row(j)) {
        sum += jl.quarters * adjacency.at(jl.col, k);
    }
    return Rational::of(sum, kQuarter * kQuarter);
}

bool Bicoloring::is_valid_for(const PhysAdjacency &adjacency) const {
    if (color.size() != adjacency.size()) {
        return false;
    }
    for (std::size_t i = 0; i < adjacency.size(); ++i) {
        if (color[i] > 1) {
            return false;
        }
        for (const auto &e : adjacency.row(i)) {
            if (color[e.col] == color[i]) {
                return false;
            }
        }
    }
    return true;
}

Bicoloring bicoloring(const PhysAdjacency &adjacency) {
    const std::size_t n = adjacency.size();
    if (n == 0) {
        throw_validation("empty_graph", "cannot color an empty adjacency");
    }
    constexpr std::uint8_t kUnset = 2;
    Bicoloring out{std::vector<std::uint8_t>(n, kUnset)};
    std::deque<std::size_t> queue;
    for (std::size_t start = 0; start < n; ++start) {
        if (out.color[start] != kUnset) {
            continue;
        }
        out.color[start] = 0;
        queue.push_back(start);
        while (!queue.empty()) {
            std::size_t u = queue.front();
            queue.pop_front();
            for (const auto &e : adjacency.row(u)) {
                if (out.color[e.col] == kUnset) {
                    out.color[e.col] = static_cast<std::uint8_t>(1 - out.color[u]);
                    queue.push_back(e.col);
                } else if (out.color[e.col] == out.color[u]) {
                    throw_validation("not_bipartite",
                                     "odd cycle through nodes " + std::to_string(u) + " and " + std::to_string(e.col));
                }
            }
        }
    }
    return out;
}

TwoBlockLayout run_length_layout(int M, std::int64_t s, std::int64_t t) {
    if (s < 0 || t < 0) {
        throw_config("t_negative", "run lengths must be nonnegative (s=" + std::to_string(s) + ", t=" + std::to_string(t) +
                                       ") at M=" + std::to_string(M));
    }
    TwoBlockLayout out{s, t, 0, {}};
    std::size_t pos = 0;
    auto skip = [&](std::int64_t k) { pos += static_cast<std::size_t>(k); };
    auto put = [&](Pattern p) { out.nonzero.emplace_back(pos++, p); };
    auto half = [&] {
        skip(s);
        put(Pattern::kMinus);
        skip(t);
        put(Pattern::kPlus);
        skip(s);
        put(Pattern::kPlus);
        skip(1);
        put(Pattern::kMinus);
        skip(s);
        put(Pattern::kMinus);
        skip(t);
        put(Pattern::kPlus);
        skip(s);
        put(Pattern::kMinus);
        skip(1);
    };
    half();
    put(Pattern::kPlus);
    half();
    out.length = pos;
    std::size_t expected = 4 * static_cast<std::size_t>(M) * static_cast<std::size_t>(M) - 1;
    if (out.length != expected) {
        throw_config("bad_run_lengths", "run lengths give a shorthand of length " + std::to_string(out.length) +
                                            ", expected " + std::to_string(expected));
    }
    return out;
}

TwoBlockLayout nominal_two_block_layout(int M) {
    validate_torus_M(M);
    return run_length_layout(M, 2 * M - 1, static_cast<std::int64_t>(M) * M - 4 * M - 3);
}

TwoBlockLayout regrouped_two_block_layout(int M) {
    validate_torus_M(M);
    return run_length_layout(M, M - 1, static_cast<std::int64_t>(M) * M - 2 * M - 3);
}

std::vector<std::size_t> invert_permutation(std::span<const std::size_t> new_of_old) {
    std::vector<std::size_t> old_of_new(new_of_old.size(), new_of_old.size());
    for (std::size_t i = 0; i < new_of_old.size(); ++i) {
        if (new_of_old[i] >= new_of_old.size() || old_of_new[new_of_old[i]] != new_of_old.size()) {
            throw_validation("bad_permutation", "not a permutation");
        }
        old_of_new[new_of_old[i]] = i;
    }
    return old_of_new;
}

namespace {

// Returns the first pair of 2x2 block positions on one skew diagonal that differ.
std::optional<std::pair<std::size_t, std::size_t>> first_block_hankel_violation(const ExactMatrix &m) {
    const auto nb = static_cast<std::size_t>(m.rows() / 2);
    std::vector<std::optional<std::size_t>> first_row_of_sum(2 * nb, std::nullopt);
    for (std::size_t r = 0; r < nb; ++r) {
        for (std::size_t c = 0; c < nb; ++c) {
            auto &seen = first_row_of_sum[r + c];
            if (!seen) {
                seen = r;
                continue;
            }
            std::size_t r0 = *seen;
            std::size_t c0 = r + c - r0;
            auto a = m.block(static_cast<Eigen::Index>(2 * r0), static_cast<Eigen::Index>(2 * c0), 2, 2);
            auto b = m.block(static_cast<Eigen::Index>(2 * r), static_cast<Eigen::Index>(2 * c), 2, 2);
            if (a != b) {
                return std::make_pair(r0 * nb + c0, r * nb + c);
            }
        }
    }
    return std::nullopt;
}

}  // namespace

Renumbering renumber_to_block_hankel(const PhysAdjacency &adjacency, int M) {
    validate_torus_M(M);
    const std::int64_t t = static_cast<std::int64_t>(M) * M - 4 * M - 3;
    if (t < 0) {
        throw_config("t_negative", "2x2 block renumbering needs run length t = M^2-4M-3 >= 0; M=" + std::to_string(M) +
                                       " gives t=" + std::to_string(t));
    }
    if (!(adjacency == expand(build_torus_supergraph(M)))) {
        throw_validation("not_torus_lattice", "input is not the expanded torus lattice for M=" + std::to_string(M));
    }

    const std::size_t n_macro = static_cast<std::size_t>(M) * static_cast<std::size_t>(M);
    Renumbering out;
    out.M = M;
    out.new_of_old.resize(4 * n_macro);
    for (std::size_t i = 0; i < n_macro; ++i) {
        for (std::size_t a = 0; a < 2; ++a) {
            for (std::size_t b = 0; b < 2; ++b) {
                out.new_of_old[4 * i + 2 * a + b] = 2 * (i + a * n_macro) + b;
            }
        }
    }
    out.renumbered = adjacency.permuted(out.new_of_old);

    ExactMatrix dense = out.renumbered.to_dense();
    if (auto bad = first_block_hankel_violation(dense)) {
        throw_invariant("no_permutation", "regrouped lattice is not 2x2 block-Hankel at blocks " +
                                              std::to_string(bad->first) + " and " + std::to_string(bad->second));
    }
    return out;
}

std::size_t MacronodeCoords::at(int x, int y) const {
    if (x < 0 || y < 0 || x >= M || y >= M) {
        throw_config("bad_coordinate", "chart coordinate out of range");
    }
    return macronode[static_cast<std::size_t>(x + M * y)];
}

std::string MacronodeCoords::convention() {
    return "t=x+M*y; even i at t=-i mod M^2, odd i at t=i+2 mod M^2; x axis P2,P3 steps t by 1; "
           "y axis P1,P0 steps t by M+1";
}

MacronodeCoords coordinates(int M) {
    validate_torus_M(M);
    const std::int64_t n = static_cast<std::int64_t>(M) * M;
    MacronodeCoords out;
    out.M = M;
    out.xy.resize(static_cast<std::size_t>(n));
    out.macronode.assign(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) {
        std::int64_t t = (i % 2 == 0) ? (n - i) % n : (i + 2) % n;
        out.xy[static_cast<std::size_t>(i)] = {static_cast<int>(t % M), static_cast<int>(t / M)};
        out.macronode[static_cast<std::size_t>(t)] = static_cast<std::size_t>(i);
    }
    return out;
}

int axis_of_label(const std::string &label) {
    if (label == "P2" || label == "P3" || label == "-P3") {
        return 0;
    }
    if (label == "P1" || label == "P0") {
        return 1;
    }
    throw_validation("bad_label", "'" + label + "' is not a torus edge label");
}

}  // namespace cvcomb
