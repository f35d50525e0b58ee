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

#ifndef CVCOMB_LATTICE_H
#define CVCOMB_LATTICE_H

#include <Eigen/Core>
#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace cvcomb {

/// Dense integer matrix. Adjacency-valued instances hold numerators over kQuarter.
using ExactMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

/// Every edge weight in this library is an integer multiple of 1/kQuarter.
inline constexpr std::int64_t kQuarter = 4;

/// Reduced fraction with positive denominator.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Rational of(std::int64_t num, std::int64_t den);
    double to_double() const {
        return static_cast<double>(num) / static_cast<double>(den);
    }
    std::string str() const;
    bool operator==(const Rational &) const = default;
};

/// The two rank-one 2x2 projectors (1/2)[[1,1],[1,1]] and (1/2)[[1,-1],[-1,1]].
enum class Pattern { kPlus, kMinus };

/// A matrix-valued edge weight between macronodes: a 2x2 or 4x4 block whose
/// entries are stored as numerators over kQuarter.
class BlockWeight {
   public:
    BlockWeight() = default;
    explicit BlockWeight(ExactMatrix quarters);
    static BlockWeight zero(std::size_t side);

    std::size_t side() const {
        return static_cast<std::size_t>(quarters_.rows());
    }
    const ExactMatrix &quarters() const {
        return quarters_;
    }
    bool is_zero() const;
    bool is_symmetric() const;
    BlockWeight transposed() const;
    BlockWeight operator-() const;
    bool operator==(const BlockWeight &other) const;

   private:
    ExactMatrix quarters_;
};

/// Rank-one projector onto R^4 (j in 0..3), entries +-1/4.
BlockWeight projector4(int j);

/// pi+ or pi-, entries +-1/2.
BlockWeight projector2(Pattern pattern);

/// Kronecker product; throws if an entry leaves the quarter grid.
BlockWeight kron(const BlockWeight &a, const BlockWeight &b);

/// Text token for a block: P0..P3, pi+, pi-, pi+/2, pi-/2, each optionally
/// negated, otherwise the explicit form "[a,b;c,d]/4".
std::string block_label(const BlockWeight &weight);
BlockWeight parse_block_label(const std::string &label, std::size_t side);

/// If `weight` is a nonzero integer multiple c*(2*pi^+-) (in quarters, i.e. c/4
/// times the +-1 pattern) returns {pattern, c}. Only meaningful for side 2.
std::optional<std::pair<Pattern, std::int64_t>> as_scaled_projector2(const BlockWeight &weight);

struct SuperEdge {
    std::size_t i = 0;
    std::size_t j = 0;
    BlockWeight weight;  // block at (i, j); block (j, i) is its transpose
};

/// Macronode-level adjacency with matrix-valued entries. Immutable.
class SuperAdjacency {
   public:
    SuperAdjacency(std::size_t n_macro, std::size_t block_side, const std::vector<SuperEdge> &edges);

    std::size_t n_macro() const {
        return n_macro_;
    }
    std::size_t block_side() const {
        return block_side_;
    }
    /// Zero block when the pair is not connected.
    BlockWeight block(std::size_t i, std::size_t j) const;
    /// Nonzero blocks keyed by (i, j) with i < j.
    const std::map<std::pair<std::size_t, std::size_t>, BlockWeight> &upper_blocks() const {
        return upper_;
    }
    std::size_t degree(std::size_t i) const;
    std::size_t edge_count() const {
        return upper_.size();
    }

   private:
    std::size_t n_macro_;
    std::size_t block_side_;
    std::map<std::pair<std::size_t, std::size_t>, BlockWeight> upper_;
};

struct Triplet {
    std::size_t i = 0;
    std::size_t j = 0;
    std::int64_t quarters = 0;
};

/// Symmetric sparse physical-node adjacency, weights as numerators over kQuarter.
class PhysAdjacency {
   public:
    struct Entry {
        std::size_t col;
        std::int64_t quarters;
        bool operator==(const Entry &) const = default;
    };

    PhysAdjacency() = default;
    /// Throws a validation error when `quarters` is not square and symmetric.
    static PhysAdjacency from_dense(const ExactMatrix &quarters);
    /// Each off-diagonal triplet is mirrored; listing both (i,j) and (j,i) is an error.
    static PhysAdjacency from_triplets(std::size_t n, const std::vector<Triplet> &triplets);

    std::size_t size() const {
        return rows_.size();
    }
    std::span<const Entry> row(std::size_t i) const {
        return rows_[i];
    }
    std::int64_t at(std::size_t i, std::size_t j) const;
    std::size_t degree(std::size_t i) const;
    /// Off-diagonal nonzero pairs, each unordered pair counted once.
    std::size_t edge_count() const;
    bool has_self_loops() const;

    ExactMatrix to_dense() const;
    Eigen::MatrixXd to_real() const;
    /// Entry (new_of_old[i], new_of_old[j]) of the result equals entry (i, j) of this.
    PhysAdjacency permuted(std::span<const std::size_t> new_of_old) const;
    /// Upper-triangle triplets (i <= j) in row-major order.
    std::vector<Triplet> triplets() const;

    bool operator==(const PhysAdjacency &) const = default;

   private:
    std::vector<std::vector<Entry>> rows_;
};

/// Block-level Hankel shorthand of the torus supergraph, length 2*M*M - 1,
/// built from the run lengths u = M-1 and v = M*M-2M-3.
std::vector<BlockWeight> torus_block_shorthand(int M);

/// M*M macronodes, 4x4 projector weights, block (i, j) = shorthand[i + j].
SuperAdjacency build_torus_supergraph(int M);

/// Even ring of macronodes whose edges alternate pi+ and pi-.
SuperAdjacency build_ring_supergraph(int n_macro);

/// Physical node index = macronode * block_side + layer.
PhysAdjacency expand(const SuperAdjacency &super);

struct OrthogonalityReport {
    bool is_orthogonal = false;
    Rational worst_deviation;  // max |(A^2 - 1)_jk|
    std::optional<std::pair<std::size_t, std::size_t>> witness;  // a pair attaining worst_deviation
    bool has_self_loops = false;
};

/// Exact test of A^2 = identity.
OrthogonalityReport check_orthogonal(const PhysAdjacency &adjacency);

/// Summed weight of all 2-paths j -> l -> k.
Rational two_path_weight(const PhysAdjacency &adjacency, std::size_t j, std::size_t k);

struct Bicoloring {
    std::vector<std::uint8_t> color;  // 0 or 1 per physical node

    /// True when the size matches and no edge joins equal colors.
    bool is_valid_for(const PhysAdjacency &adjacency) const;
};

/// Breadth-first 2-coloring of the support graph, lowest index of each
/// component gets color 0. Throws on an odd cycle.
Bicoloring bicoloring(const PhysAdjacency &adjacency);

/// Positions and projector patterns of the nonzero entries of a 2x2
/// block-Hankel shorthand laid out as
///   [0^s,-,0^t,+,0^s,+,0,-,0^s,-,0^t,+,0^s,-,0 / + / (first half again)]
/// where + and - are pi+ and pi-.
struct TwoBlockLayout {
    std::int64_t s = 0;
    std::int64_t t = 0;
    std::size_t length = 0;  // 2 * n_blocks - 1
    std::vector<std::pair<std::size_t, Pattern>> nonzero;
};

TwoBlockLayout run_length_layout(int M, std::int64_t s, std::int64_t t);
/// s = 2M-1, t = M^2-4M-3: the commonly quoted run lengths for the 2x2 form.
TwoBlockLayout nominal_two_block_layout(int M);
/// s = M-1, t = M^2-2M-3: the positions produced by regrouping on the second
/// tensor factor of each projector.
TwoBlockLayout regrouped_two_block_layout(int M);

struct Renumbering {
    int M = 0;
    std::vector<std::size_t> new_of_old;
    PhysAdjacency renumbered;
};

/// Permutes expand(build_torus_supergraph(M)) into 2x2 block-Hankel form.
/// Physical node 4i + 2a + b (macronode i, projector factors a and b) moves to
/// 2(i + a*M*M) + b, so every 2x2 block is a multiple of pi+ or pi-.
Renumbering renumber_to_block_hankel(const PhysAdjacency &adjacency, int M);

/// Inverse of a permutation given as new_of_old.
std::vector<std::size_t> invert_permutation(std::span<const std::size_t> new_of_old);

/// Lattice chart for the torus supergraph.
///
/// Chart position t = x + M*y. Even macronode i sits at t = -i mod M^2, odd i at
/// t = i + 2 mod M^2. Stepping along the x axis (labels P2, P3) moves t by +-1,
/// so leaving the right edge of a row enters the next row: the one-unit twist.
/// Stepping along the y axis (labels P1, P0) moves t by +-(M+1). Each axis
/// traced alone is a single closed cycle through all M^2 macronodes.
struct MacronodeCoords {
    int M = 0;
    std::vector<std::array<int, 2>> xy;   // by macronode index
    std::vector<std::size_t> macronode;  // by chart position x + M*y

    std::size_t at(int x, int y) const;
    static std::string convention();
};

MacronodeCoords coordinates(int M);

/// Lattice direction of an edge label: 0 for the x axis (P2, P3), 1 for y (P1, P0).
int axis_of_label(const std::string &label);

}  // namespace cvcomb

#endif
