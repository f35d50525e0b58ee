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

#include "cvcomb/reduce.h"

#include <gtest/gtest.h>

#include <functional>
#include <numeric>

#include "cvcomb/error.h"

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

}  // namespace

TEST(layers, node_lists) {
    EXPECT_EQ(layer_nodes(3, 4, 1), (std::vector<std::size_t>{1, 5, 9}));
    EXPECT_EQ(nodes_outside_layer(2, 2, 0), (std::vector<std::size_t>{1, 3}));
    EXPECT_EQ(cause_of([] { layer_nodes(3, 4, 4); }), "invalid_layer");
    EXPECT_EQ(cause_of([] { nodes_outside_layer(3, 2, 2); }), "invalid_layer");
}

TEST(census, small_graphs) {
    PhysAdjacency path = PhysAdjacency::from_triplets(4, {{0, 1, 1}, {1, 2, -1}, {2, 3, 1}});
    GraphCensus c = census(path);
    EXPECT_EQ(c.components, 1u);
    EXPECT_EQ(c.cycle_rank, 0u);
    EXPECT_EQ(c.max_degree, 2u);
    EXPECT_EQ(c.uniform_magnitude, std::optional<std::int64_t>{1});
    EXPECT_TRUE(c.planar);

    PhysAdjacency split = PhysAdjacency::from_triplets(4, {{0, 1, 1}, {2, 3, 2}});
    GraphCensus s = census(split);
    EXPECT_EQ(s.components, 2u);
    EXPECT_FALSE(s.connected());
    EXPECT_FALSE(s.uniform_magnitude.has_value());

    // K5 is the smallest nonplanar graph.
    std::vector<Triplet> k5;
    for (std::size_t i = 0; i < 5; ++i) {
        for (std::size_t j = i + 1; j < 5; ++j) {
            k5.push_back({i, j, 1});
        }
    }
    EXPECT_FALSE(census(PhysAdjacency::from_triplets(5, k5)).planar);
}

TEST(ideal_reduction, lattice_layer_is_four_regular_uniform) {
    PhysAdjacency a = expand(build_torus_supergraph(6));
    for (std::size_t layer = 0; layer < 4; ++layer) {
        std::vector<std::size_t> measured = nodes_outside_layer(36, 4, layer);
        GraphCensus c = census(ideal_graph_delete(a, measured));
        EXPECT_EQ(c.nodes, 36u);
        EXPECT_EQ(c.degree_count, (std::map<std::size_t, std::size_t>{{4, 36}}));
        EXPECT_EQ(c.uniform_magnitude, std::optional<std::int64_t>{1});
        EXPECT_TRUE(c.connected());
    }
}

TEST(axis_cycles, single_hamiltonian_cycle_per_axis) {
    for (int M : {4, 6, 8, 10}) {
        for (int axis : {0, 1}) {
            EXPECT_EQ(axis_cycle_lengths(M, axis), (std::vector<std::size_t>{static_cast<std::size_t>(M * M)}));
        }
    }
    EXPECT_EQ(cause_of([] { axis_cycle_lengths(6, 2); }), "invalid_axis");
}

TEST(cut, ideal_cut_every_meridian_and_layer) {
    for (std::size_t layer = 0; layer < 4; ++layer) {
        for (int x0 = 0; x0 < 6; ++x0) {
            for (int y0 = 0; y0 < 6; ++y0) {
                CutReport cut = reduce_and_cut(6, layer, x0, y0);
                EXPECT_EQ(cut.cut_macronodes.size(), 11u);
                EXPECT_EQ(cut.census.nodes, 25u);
                EXPECT_TRUE(cut.census.connected());
                EXPECT_LE(cut.census.max_degree, 4u);
                EXPECT_TRUE(cut.census.planar);
                EXPECT_EQ(cut.kept.size() + cut.measured.size(), 144u);
            }
        }
    }
}

TEST(cut, rejects_bad_arguments) {
    EXPECT_EQ(cause_of([] { reduce_and_cut(6, 4, 0, 0); }), "invalid_layer");
    EXPECT_EQ(cause_of([] { reduce_and_cut(6, 0, 6, 0); }), "invalid_meridian");
    EXPECT_EQ(cause_of([] { reduce_and_cut(6, 0, 0, -1); }), "invalid_meridian");
    EXPECT_EQ(cause_of([] { reduce_and_cut(5, 0, 0, 0); }), "odd_M");
}

TEST(measurement_reduction, ring_converges) {
    double previous_residual = 1.0;
    double previous_error = 1.0;
    for (double r : {1.0, 2.0, 3.0}) {
        MeasurementReduction red = reduce_ring_top(4, r);
        EXPECT_EQ(red.kept, (std::vector<std::size_t>{1, 3, 5, 7}));
        EXPECT_LT(red.residuals.max_variance, previous_residual);
        EXPECT_LT(red.effective_graph_error, previous_error);
        EXPECT_NEAR(red.state.purity_det(), 1.0, 1e-9);
        previous_residual = red.residuals.max_variance;
        previous_error = red.effective_graph_error;
    }
}

TEST(measurement_reduction, lattice_effective_graph_converges) {
    double previous = 1.0;
    for (double r : {1.0, 2.0, 3.0}) {
        MeasurementReduction red = reduce_lattice_layers(6, 0, r);
        EXPECT_EQ(red.kept.size(), 36u);
        EXPECT_LT(red.effective_graph_error, previous);
        EXPECT_LT(red.residuals.max_variance, 0.5);
        previous = red.effective_graph_error;
    }
}

TEST(measurement_reduction, measuring_everything_leaves_empty_state) {
    PhysAdjacency ring = expand(build_ring_supergraph(4));
    std::vector<std::size_t> all(8);
    std::iota(all.begin(), all.end(), 0);
    MeasurementReduction red = reduce_by_measurement(ring, all, 1.0);
    EXPECT_EQ(red.state.modes(), 0u);
    EXPECT_TRUE(red.kept.empty());
    EXPECT_EQ(red.ideal.size(), 0u);
}

// Raw nullifier variances are not increased by the extra meridian measurements;
// the normalized ones can be, because cut rows lose weight.
TEST(cut, gaussian_cut_residuals) {
    GaussianCutReport r1 = reduce_and_cut_gaussian(6, 0, 0, 0, 1.0);
    GaussianCutReport r2 = reduce_and_cut_gaussian(6, 0, 0, 0, 2.0);
    for (const auto *g : {&r1, &r2}) {
        EXPECT_LE(g->post_cut.residuals.max_raw_variance, g->pre_cut.residuals.max_raw_variance + 1e-12);
        EXPECT_EQ(g->post_cut.kept, g->cut.kept);
    }
    EXPECT_LT(r2.post_cut.residuals.max_variance, r1.post_cut.residuals.max_variance);
    EXPECT_LT(r2.post_cut.effective_graph_error, r1.post_cut.effective_graph_error);
}
