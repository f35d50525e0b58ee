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

#include <gtest/gtest.h>

#include <functional>
#include <map>
#include <set>

#include "cvcomb/error.h"
#include "cvcomb/hankel.h"

using namespace cvcomb;

namespace {

std::string cause_of(const std::function<void()> &f) {
    try {
        f();
    } catch (const Error &e) {
        return e.cause();
    }
    return "no error";
}

PhysAdjacency unweighted(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>> &edges) {
    std::vector<Triplet> t;
    for (auto [i, j] : edges) {
        t.push_back({i, j, kQuarter});
    }
    return PhysAdjacency::from_triplets(n, t);
}

}  // namespace

TEST(projectors, projector4_zero_is_uniform_quarter) {
    EXPECT_EQ(projector4(0).quarters(), ExactMatrix::Ones(4, 4));
}

TEST(projectors, projector4_mutually_orthogonal_and_complete) {
    ExactMatrix sum = ExactMatrix::Zero(4, 4);
    for (int i = 0; i < 4; ++i) {
        sum += projector4(i).quarters();
        for (int j = 0; j < 4; ++j) {
            // (Q_i / 4)(Q_j / 4) = delta_ij Q_i / 4  <=>  Q_i Q_j = 4 delta_ij Q_i.
            ExactMatrix product = projector4(i).quarters() * projector4(j).quarters();
            ExactMatrix expected = i == j ? ExactMatrix(4 * projector4(i).quarters()) : ExactMatrix::Zero(4, 4);
            EXPECT_EQ(product, expected) << i << "," << j;
        }
    }
    EXPECT_EQ(sum, ExactMatrix(4 * ExactMatrix::Identity(4, 4)));
}

TEST(projectors, projector4_rejects_bad_index) {
    EXPECT_EQ(cause_of([] { projector4(4); }), "bad_projector_index");
    EXPECT_EQ(cause_of([] { projector4(-1); }), "bad_projector_index");
}

TEST(projectors, projector2_entries) {
    ExactMatrix plus(2, 2), minus(2, 2);
    plus << 2, 2, 2, 2;
    minus << 2, -2, -2, 2;
    EXPECT_EQ(projector2(Pattern::kPlus).quarters(), plus);
    EXPECT_EQ(projector2(Pattern::kMinus).quarters(), minus);
    EXPECT_TRUE((projector2(Pattern::kPlus).quarters() * projector2(Pattern::kMinus).quarters()).isZero());
}

TEST(projectors, kron_pairing_reproduces_projector4) {
    EXPECT_EQ(kron(projector2(Pattern::kPlus), projector2(Pattern::kPlus)), projector4(0));
    EXPECT_EQ(kron(projector2(Pattern::kPlus), projector2(Pattern::kMinus)), projector4(1));
    EXPECT_EQ(kron(projector2(Pattern::kMinus), projector2(Pattern::kPlus)), projector4(2));
    EXPECT_EQ(kron(projector2(Pattern::kMinus), projector2(Pattern::kMinus)), projector4(3));
}

TEST(projectors, labels_round_trip) {
    for (int j = 0; j < 4; ++j) {
        EXPECT_EQ(parse_block_label(block_label(projector4(j)), 4), projector4(j));
        EXPECT_EQ(parse_block_label(block_label(-projector4(j)), 4), -projector4(j));
    }
    EXPECT_EQ(block_label(projector4(3)), "P3");
    EXPECT_EQ(block_label(-projector4(3)), "-P3");
    EXPECT_EQ(block_label(projector2(Pattern::kPlus)), "pi+");
    EXPECT_EQ(block_label(projector2(Pattern::kMinus)), "pi-");
    ExactMatrix odd(2, 2);
    odd << 1, 0, 0, 3;
    EXPECT_EQ(parse_block_label(block_label(BlockWeight(odd)), 2), BlockWeight(odd));
    EXPECT_EQ(cause_of([] { parse_block_label("P7", 4); }), "bad_block_label");
}

TEST(projectors, scaled_projector_detection) {
    auto half_minus = as_scaled_projector2(BlockWeight(ExactMatrix(projector2(Pattern::kMinus).quarters() / 2)));
    ASSERT_TRUE(half_minus.has_value());
    EXPECT_EQ(half_minus->first, Pattern::kMinus);
    ExactMatrix diag(2, 2);
    diag << 1, 0, 0, 1;
    EXPECT_FALSE(as_scaled_projector2(BlockWeight(diag)).has_value());
}

TEST(rational, reduces_and_prints) {
    EXPECT_EQ(Rational::of(2, 4).str(), "1/2");
    EXPECT_EQ(Rational::of(-4, 4).str(), "-1");
    EXPECT_EQ(Rational::of(0, 4).str(), "0");
}

TEST(torus, shorthand_at_M4) {
    std::vector<BlockWeight> s = torus_block_shorthand(4);
    ASSERT_EQ(s.size(), 31u);
    std::map<std::size_t, std::string> expected = {{3, "P1"},  {9, "P0"},  {13, "P3"}, {15, "P2"},
                                                   {19, "P1"}, {25, "P0"}, {29, "-P3"}};
    for (std::size_t d = 0; d < s.size(); ++d) {
        if (expected.count(d)) {
            EXPECT_EQ(block_label(s[d]), expected[d]) << d;
        } else {
            EXPECT_TRUE(s[d].is_zero()) << d;
        }
    }
}

TEST(torus, supergraph_matches_shorthand_at_4x4_granularity) {
    for (int M : {4, 6, 8}) {
        PhysAdjacency phys = expand(build_torus_supergraph(M));
        HankelShorthand sh = shorthand_of(phys, 4);
        std::vector<BlockWeight> s = torus_block_shorthand(M);
        ASSERT_EQ(sh.entries.size(), s.size());
        for (std::size_t d = 0; d < s.size(); ++d) {
            EXPECT_EQ(BlockWeight(sh.entries[d]), s[d]);
        }
    }
}

TEST(torus, degrees_and_counts) {
    for (int M : {4, 6, 8, 10}) {
        SuperAdjacency super = build_torus_supergraph(M);
        for (std::size_t i = 0; i < super.n_macro(); ++i) {
            EXPECT_EQ(super.degree(i), 4u);
        }
        EXPECT_EQ(super.edge_count(), static_cast<std::size_t>(2 * M * M));
        PhysAdjacency phys = expand(super);
        EXPECT_EQ(phys.size(), static_cast<std::size_t>(4 * M * M));
        EXPECT_EQ(phys.edge_count(), static_cast<std::size_t>(32 * M * M));
    }
}

TEST(torus, rejects_bad_M) {
    EXPECT_EQ(cause_of([] { build_torus_supergraph(5); }), "odd_M");
    EXPECT_EQ(cause_of([] { build_torus_supergraph(2); }), "M_too_small");
    EXPECT_EQ(cause_of([] { build_torus_supergraph(0); }), "M_too_small");
}

// Property over sizes: symmetric, zero diagonal, entries in {0, +-1/4},
// unit row norm and A^2 = 1 exactly.
TEST(torus, exact_orthogonality_property) {
    for (int M = 4; M <= 12; M += 2) {
        PhysAdjacency a = expand(build_torus_supergraph(M));
        ExactMatrix d = a.to_dense();
        EXPECT_EQ(d, d.transpose());
        EXPECT_FALSE(a.has_self_loops());
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::int64_t norm = 0;
            for (const auto &e : a.row(i)) {
                EXPECT_EQ(std::abs(e.quarters), 1);
                norm += e.quarters * e.quarters;
            }
            EXPECT_EQ(norm, kQuarter * kQuarter);
        }
        OrthogonalityReport rep = check_orthogonal(a);
        EXPECT_TRUE(rep.is_orthogonal) << M;
        EXPECT_EQ(rep.worst_deviation, Rational::of(0, 1));
    }
}

TEST(torus, two_path_weights_entrywise) {
    PhysAdjacency a = expand(build_torus_supergraph(4));
    for (std::size_t j = 0; j < a.size(); ++j) {
        for (std::size_t k = 0; k < a.size(); ++k) {
            EXPECT_EQ(two_path_weight(a, j, k), Rational::of(j == k ? 1 : 0, 1));
        }
    }
    EXPECT_EQ(cause_of([&] { two_path_weight(a, 0, 64); }), "index_out_of_range");
}

TEST(orthogonality, unweighted_four_cycle_fails) {
    PhysAdjacency cycle = unweighted(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    OrthogonalityReport rep = check_orthogonal(cycle);
    EXPECT_FALSE(rep.is_orthogonal);
    // A^2 has 2 on the diagonal (deviation 1) and 2 between opposite corners (deviation 2).
    EXPECT_EQ(two_path_weight(cycle, 0, 0), Rational::of(2, 1));
    EXPECT_EQ(two_path_weight(cycle, 0, 2), Rational::of(2, 1));
    EXPECT_EQ(rep.worst_deviation, Rational::of(2, 1));
    ASSERT_TRUE(rep.witness.has_value());
    EXPECT_EQ(two_path_weight(cycle, rep.witness->first, rep.witness->second), Rational::of(2, 1));
}

TEST(orthogonality, identity_is_orthogonal_but_flagged) {
    OrthogonalityReport rep = check_orthogonal(PhysAdjacency::from_dense(ExactMatrix(kQuarter * ExactMatrix::Identity(3, 3))));
    EXPECT_TRUE(rep.is_orthogonal);
    EXPECT_TRUE(rep.has_self_loops);
}

TEST(orthogonality, square_lattice_has_single_two_paths) {
    // 6x6 unweighted torus: nodes two steps apart along a line share one 2-path.
    const std::size_t L = 6;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t x = 0; x < L; ++x) {
        for (std::size_t y = 0; y < L; ++y) {
            edges.push_back({x + L * y, (x + 1) % L + L * y});
            edges.push_back({x + L * y, x + L * ((y + 1) % L)});
        }
    }
    PhysAdjacency a = unweighted(L * L, edges);
    EXPECT_EQ(two_path_weight(a, 0, 2), Rational::of(1, 1));
    EXPECT_FALSE(check_orthogonal(a).is_orthogonal);
}

TEST(orthogonality, rejects_asymmetric_and_empty) {
    ExactMatrix m = ExactMatrix::Zero(2, 2);
    m(0, 1) = 1;
    EXPECT_EQ(cause_of([&] { PhysAdjacency::from_dense(m); }), "asymmetric");
    EXPECT_EQ(cause_of([] { check_orthogonal(PhysAdjacency{}); }), "empty_graph");
}

TEST(ring, four_macronodes_orthogonal_bipartite) {
    SuperAdjacency ring = build_ring_supergraph(4);
    PhysAdjacency a = expand(ring);
    EXPECT_EQ(a.size(), 8u);
    EXPECT_TRUE(check_orthogonal(a).is_orthogonal);
    EXPECT_TRUE(bicoloring(a).is_valid_for(a));
    EXPECT_EQ(block_label(ring.block(0, 1)), "pi+");
    EXPECT_EQ(block_label(ring.block(1, 2)), "pi-");
    EXPECT_EQ(block_label(ring.block(3, 0)), "pi-");
}

TEST(ring, larger_even_rings_orthogonal) {
    for (int n : {6, 8, 12}) {
        EXPECT_TRUE(check_orthogonal(expand(build_ring_supergraph(n))).is_orthogonal) << n;
    }
}

TEST(ring, rejects_odd_and_small) {
    EXPECT_EQ(cause_of([] { build_ring_supergraph(5); }), "odd_ring");
    EXPECT_EQ(cause_of([] { build_ring_supergraph(2); }), "ring_too_small");
}

TEST(supergraph, rejects_degenerate_input) {
    EXPECT_EQ(cause_of([] { SuperAdjacency(0, 2, {}); }), "empty_graph");
    EXPECT_EQ(cause_of([] { SuperAdjacency(2, 2, {{1, 1, projector2(Pattern::kPlus)}}); }), "self_loop");
    EXPECT_EQ(cause_of([] {
                  SuperAdjacency(2, 2, {{0, 1, projector2(Pattern::kPlus)}, {1, 0, projector2(Pattern::kPlus)}});
              }),
              "duplicate_edge");
}

TEST(supergraph, expand_of_edgeless_graph_is_zero) {
    PhysAdjacency a = expand(SuperAdjacency(3, 2, {}));
    EXPECT_EQ(a.size(), 6u);
    EXPECT_EQ(a.edge_count(), 0u);
}

TEST(supergraph, block_transpose_symmetry) {
    SuperAdjacency super = build_torus_supergraph(6);
    for (const auto &[ij, w] : super.upper_blocks()) {
        EXPECT_EQ(super.block(ij.second, ij.first), w.transposed());
    }
}

TEST(bicoloring, lattice_ring_and_triangle) {
    PhysAdjacency lattice = expand(build_torus_supergraph(6));
    EXPECT_TRUE(bicoloring(lattice).is_valid_for(lattice));
    PhysAdjacency cycle = unweighted(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
    Bicoloring c = bicoloring(cycle);
    for (std::size_t k = 0; k < 6; ++k) {
        EXPECT_EQ(c.color[k], k % 2);
    }
    EXPECT_EQ(cause_of([] { bicoloring(unweighted(3, {{0, 1}, {1, 2}, {2, 0}})); }), "not_bipartite");
}

TEST(renumber, block_hankel_with_fifteen_blocks) {
    for (int M : {6, 8, 10}) {
        PhysAdjacency a = expand(build_torus_supergraph(M));
        Renumbering ren = renumber_to_block_hankel(a, M);
        HankelShorthand sh = shorthand_of(ren.renumbered, 2);
        EXPECT_EQ(sh.nonzero_count(), 15u);
        EXPECT_EQ(ren.renumbered.permuted(invert_permutation(ren.new_of_old)), a);
        // P A P^T entrywise.
        for (const auto &t : a.triplets()) {
            EXPECT_EQ(ren.renumbered.at(ren.new_of_old[t.i], ren.new_of_old[t.j]), t.quarters);
        }
        TwoBlockLayout layout = regrouped_two_block_layout(M);
        std::size_t k = 0;
        for (std::size_t d = 0; d < sh.entries.size(); ++d) {
            if (!BlockWeight(sh.entries[d]).is_zero()) {
                ASSERT_LT(k, layout.nonzero.size());
                EXPECT_EQ(d, layout.nonzero[k].first);
                auto scaled = as_scaled_projector2(BlockWeight(sh.entries[d]));
                ASSERT_TRUE(scaled.has_value());
                EXPECT_EQ(std::abs(scaled->second), 1);
                ++k;
            }
        }
    }
}

TEST(renumber, rows_keep_unit_norm) {
    Renumbering ren = renumber_to_block_hankel(expand(build_torus_supergraph(6)), 6);
    EXPECT_TRUE(check_orthogonal(ren.renumbered).is_orthogonal);
}

TEST(renumber, rejects_bad_inputs) {
    EXPECT_EQ(cause_of([] { renumber_to_block_hankel(expand(build_torus_supergraph(4)), 4); }), "t_negative");
    EXPECT_EQ(cause_of([] { renumber_to_block_hankel(expand(build_torus_supergraph(6)), 5); }), "odd_M");
    EXPECT_EQ(cause_of([] { renumber_to_block_hankel(expand(build_ring_supergraph(4)), 6); }), "not_torus_lattice");
}

TEST(renumber, nominal_layout_lengths) {
    TwoBlockLayout nominal = nominal_two_block_layout(6);
    EXPECT_EQ(nominal.s, 11);
    EXPECT_EQ(nominal.t, 9);
    EXPECT_EQ(nominal.length, 143u);
    EXPECT_EQ(nominal.nonzero.size(), 15u);
    EXPECT_EQ(cause_of([] { nominal_two_block_layout(4); }), "t_negative");
}

TEST(renumber, permutation_inverse) {
    std::vector<std::size_t> p = {2, 0, 1};
    std::vector<std::size_t> inv = invert_permutation(p);
    EXPECT_EQ(inv, (std::vector<std::size_t>{1, 2, 0}));
    EXPECT_EQ(cause_of([] { invert_permutation(std::vector<std::size_t>{0, 0}); }), "bad_permutation");
}

TEST(coordinates, bijective_chart) {
    for (int M : {4, 6, 8}) {
        MacronodeCoords c = coordinates(M);
        std::set<std::pair<int, int>> seen;
        for (std::size_t i = 0; i < c.xy.size(); ++i) {
            seen.insert({c.xy[i][0], c.xy[i][1]});
            EXPECT_EQ(c.at(c.xy[i][0], c.xy[i][1]), i);
        }
        EXPECT_EQ(seen.size(), static_cast<std::size_t>(M * M));
    }
}

TEST(coordinates, one_neighbor_per_label_and_axis_steps) {
    for (int M : {4, 6, 8}) {
        SuperAdjacency super = build_torus_supergraph(M);
        MacronodeCoords c = coordinates(M);
        const int n = M * M;
        std::vector<std::map<std::string, int>> census(super.n_macro());
        for (const auto &[ij, w] : super.upper_blocks()) {
            std::string label = block_label(w);
            std::string klass = label == "-P3" ? "P3" : label;
            ++census[ij.first][klass];
            ++census[ij.second][klass];
            int ti = c.xy[ij.first][0] + M * c.xy[ij.first][1];
            int tj = c.xy[ij.second][0] + M * c.xy[ij.second][1];
            int step = ((tj - ti) % n + n) % n;
            if (axis_of_label(label) == 0) {
                EXPECT_TRUE(step == 1 || step == n - 1) << label;
            } else {
                EXPECT_TRUE(step == M + 1 || step == n - M - 1) << label;
            }
        }
        for (const auto &m : census) {
            EXPECT_EQ(m.size(), 4u);
            for (const auto &[label, count] : m) {
                EXPECT_EQ(count, 1) << label;
            }
        }
    }
}

TEST(coordinates, rejects_bad_M_and_coordinates) {
    EXPECT_EQ(cause_of([] { coordinates(7); }), "odd_M");
    EXPECT_EQ(cause_of([] { coordinates(4).at(4, 0); }), "bad_coordinate");
    EXPECT_EQ(cause_of([] { axis_of_label("pi+"); }), "bad_label");
}

// The s=2M-1, t=M^2-4M-3 layout is not a renumbering of the lattice for any
// block signs: its support graph has a different count of closed 6-walks.
TEST(renumber, nominal_layout_support_differs) {
    const int M = 6;
    TwoBlockLayout nominal = nominal_two_block_layout(M);
    const Eigen::Index nb = 2 * M * M;
    ExactMatrix layout = ExactMatrix::Zero(2 * nb, 2 * nb);
    for (const auto &[pos, pattern] : nominal.nonzero) {
        for (Eigen::Index r = 0; r < nb; ++r) {
            Eigen::Index c = static_cast<Eigen::Index>(pos) - r;
            if (c >= 0 && c < nb) {
                layout.block(2 * r, 2 * c, 2, 2).setOnes();
            }
        }
    }
    ExactMatrix lattice = expand(build_torus_supergraph(M)).to_dense().cwiseAbs().cwiseMin(1);
    auto walks = [](const ExactMatrix &s) {
        ExactMatrix s3 = s * s * s;
        return (s3 * s3).trace();
    };
    EXPECT_EQ(layout.rowwise().sum(), lattice.rowwise().sum());  // both 16-regular
    EXPECT_EQ(walks(lattice), 60751872);
    EXPECT_EQ(walks(layout), 64880640);
}
