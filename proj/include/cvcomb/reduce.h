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

#ifndef CVCOMB_REDUCE_H
#define CVCOMB_REDUCE_H

#include <Eigen/Core>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "cvcomb/gaussian.h"
#include "cvcomb/lattice.h"

namespace cvcomb {

/// Physical nodes at `layer` inside every macronode (index = macronode * block_side + layer).
std::vector<std::size_t> layer_nodes(std::size_t n_macro, std::size_t block_side, std::size_t layer);

/// Every physical node not at `layer`.
std::vector<std::size_t> nodes_outside_layer(std::size_t n_macro, std::size_t block_side, std::size_t layer);

/// Combinatorial summary of a support graph.
struct GraphCensus {
    std::size_t nodes = 0;
    std::size_t edges = 0;
    std::size_t components = 0;
    std::size_t max_degree = 0;
    std::size_t cycle_rank = 0;                      // edges - nodes + components
    std::map<std::size_t, std::size_t> degree_count;  // degree -> how many nodes
    std::optional<std::int64_t> uniform_magnitude;    // |weight| in quarters when all edges agree
    bool planar = false;

    bool connected() const {
        return components == 1;
    }
};

GraphCensus census(const PhysAdjacency &adjacency);

/// Gaussian stand-in for ideal_graph_delete: evolve vacuum under A, choose the
/// phase convention against A, then homodyne q on `measured`.
struct MeasurementReduction {
    double squeeze_r = 0.0;
    int quarter_turns = 1;
    int target_sign = 1;
    std::vector<std::size_t> kept;
    PhysAdjacency ideal;               // ideal_graph_delete(A, measured)
    Eigen::MatrixXd signed_ideal;      // target_sign * ideal
    NullifierReport residuals;         // remaining state against signed_ideal
    double effective_graph_error = 0;  // max |V - signed_ideal|
    GaussianState state;
};

MeasurementReduction reduce_by_measurement(const PhysAdjacency &adjacency, std::span<const std::size_t> measured,
                                           double squeeze_r);

/// Layer reduction on the torus lattice of side M: measure every node outside `keep_layer`.
MeasurementReduction reduce_lattice_layers(int M, std::size_t keep_layer, double squeeze_r);

/// Top-layer measurement on the ring of n_macro macronodes, leaving layer 1.
MeasurementReduction reduce_ring_top(int n_macro, double squeeze_r);

/// Cycle lengths of the macronode subgraph carried by one axis's labels.
std::vector<std::size_t> axis_cycle_lengths(int M, int axis);

/// Ideal torus cut: keep one layer, then also delete the kept-layer nodes whose
/// macronode sits on chart column x0 or chart row y0.
struct CutReport {
    int M = 0;
    std::size_t keep_layer = 0;
    int x0 = 0;
    int y0 = 0;
    std::vector<std::size_t> cut_macronodes;  // ascending
    std::vector<std::size_t> measured;        // physical, ascending
    std::vector<std::size_t> kept;            // physical, ascending
    PhysAdjacency remaining;
    GraphCensus census;
    std::vector<std::size_t> x_axis_cycles;   // full torus, before cutting
    std::vector<std::size_t> y_axis_cycles;
};

CutReport reduce_and_cut(int M, std::size_t keep_layer, int x0, int y0);

/// The same cut carried out by homodyne measurement at squeeze_r. `pre_cut`
/// measures only the other layers; `post_cut` also measures the meridians.
struct GaussianCutReport {
    CutReport cut;
    MeasurementReduction pre_cut;
    MeasurementReduction post_cut;
};

GaussianCutReport reduce_and_cut_gaussian(int M, std::size_t keep_layer, int x0, int y0, double squeeze_r);

}  // namespace cvcomb

#endif
