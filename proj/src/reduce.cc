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

#include <algorithm>
#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <cstdlib>
#include <queue>
#include <string>

#include "cvcomb/error.h"

namespace cvcomb {

namespace {

void check_layer(std::size_t block_side, std::size_t layer) {
    if (layer >= block_side) {
        throw_config("invalid_layer",
                     "layer " + std::to_string(layer) + " out of range 0.." + std::to_string(block_side - 1));
    }
}

bool is_planar(const PhysAdjacency &adjacency) {
    using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
    Graph g(adjacency.size());
    for (const auto &t : adjacency.triplets()) {
        if (t.i != t.j) {
            boost::add_edge(t.i, t.j, g);
        }
    }
    return boost::boyer_myrvold_planarity_test(g);
}

}  // namespace

std::vector<std::size_t> layer_nodes(std::size_t n_macro, std::size_t block_side, std::size_t layer) {
    check_layer(block_side, layer);
    std::vector<std::size_t> out;
    for (std::size_t m = 0; m < n_macro; ++m) {
        out.push_back(m * block_side + layer);
    }
    return out;
}

std::vector<std::size_t> nodes_outside_layer(std::size_t n_macro, std::size_t block_side, std::size_t layer) {
    check_layer(block_side, layer);
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < n_macro * block_side; ++k) {
        if (k % block_side != layer) {
            out.push_back(k);
        }
    }
    return out;
}

GraphCensus census(const PhysAdjacency &adjacency) {
    GraphCensus c;
    c.nodes = adjacency.size();
    c.edges = adjacency.edge_count();
    std::vector<std::size_t> component(c.nodes, c.nodes);
    for (std::size_t start = 0; start < c.nodes; ++start) {
        if (component[start] != c.nodes) {
            continue;
        }
        std::queue<std::size_t> frontier;
        frontier.push(start);
        component[start] = c.components;
        while (!frontier.empty()) {
            std::size_t u = frontier.front();
            frontier.pop();
            for (const auto &e : adjacency.row(u)) {
                if (component[e.col] == c.nodes) {
                    component[e.col] = c.components;
                    frontier.push(e.col);
                }
            }
        }
        ++c.components;
    }
    for (std::size_t u = 0; u < c.nodes; ++u) {
        std::size_t d = adjacency.degree(u);
        c.max_degree = std::max(c.max_degree, d);
        ++c.degree_count[d];
    }
    c.cycle_rank = c.edges + c.components - c.nodes;
    for (const auto &t : adjacency.triplets()) {
        std::int64_t mag = std::abs(t.quarters);
        if (!c.uniform_magnitude.has_value()) {
            c.uniform_magnitude = mag;
        } else if (*c.uniform_magnitude != mag) {
            c.uniform_magnitude = std::nullopt;
            break;
        }
    }
    c.planar = is_planar(adjacency);
    return c;
}

MeasurementReduction reduce_by_measurement(const PhysAdjacency &adjacency, std::span<const std::size_t> measured,
                                           double squeeze_r) {
    const Eigen::MatrixXd a = adjacency.to_real();
    GaussianState evolved = evolve(EvolutionParams{squeeze_r, a});
    PhaseChoice phase = best_phase_convention(evolved, bicoloring(adjacency), a, squeeze_r);

    MeasurementReduction out;
    out.squeeze_r = squeeze_r;
    out.quarter_turns = phase.quarter_turns;
    out.target_sign = phase.target_sign;
    out.ideal = ideal_graph_delete(adjacency, measured);
    out.signed_ideal = phase.target_sign * out.ideal.to_real();
    ConditionedState conditioned = measure_q(phase.state, measured);
    out.kept = std::move(conditioned.kept);
    out.state = std::move(conditioned.state);
    out.residuals = nullifier_variances(out.state, out.signed_ideal, squeeze_r);
    if (out.state.modes() > 0) {
        EffectiveGraph g = effective_graph(out.state);
        out.effective_graph_error = (g.V - out.signed_ideal).cwiseAbs().maxCoeff();
    }
    return out;
}

MeasurementReduction reduce_lattice_layers(int M, std::size_t keep_layer, double squeeze_r) {
    SuperAdjacency super = build_torus_supergraph(M);
    std::vector<std::size_t> measured = nodes_outside_layer(super.n_macro(), super.block_side(), keep_layer);
    return reduce_by_measurement(expand(super), measured, squeeze_r);
}

MeasurementReduction reduce_ring_top(int n_macro, double squeeze_r) {
    SuperAdjacency super = build_ring_supergraph(n_macro);
    std::vector<std::size_t> measured = layer_nodes(super.n_macro(), super.block_side(), 0);
    return reduce_by_measurement(expand(super), measured, squeeze_r);
}

std::vector<std::size_t> axis_cycle_lengths(int M, int axis) {
    if (axis != 0 && axis != 1) {
        throw_config("invalid_axis", "axis must be 0 (x) or 1 (y)");
    }
    SuperAdjacency super = build_torus_supergraph(M);
    const std::size_t n = super.n_macro();
    std::vector<std::vector<std::size_t>> nbrs(n);
    for (const auto &[ij, w] : super.upper_blocks()) {
        if (axis_of_label(block_label(w)) == axis) {
            nbrs[ij.first].push_back(ij.second);
            nbrs[ij.second].push_back(ij.first);
        }
    }
    std::vector<std::size_t> lengths;
    std::vector<bool> seen(n, false);
    for (std::size_t start = 0; start < n; ++start) {
        if (seen[start]) {
            continue;
        }
        if (nbrs[start].size() != 2) {
            throw_invariant("axis_not_cycles", "axis subgraph has a node of degree " +
                                                   std::to_string(nbrs[start].size()));
        }
        std::size_t length = 0;
        std::size_t prev = n;
        std::size_t cur = start;
        do {
            seen[cur] = true;
            ++length;
            std::size_t next = nbrs[cur][0] == prev ? nbrs[cur][1] : nbrs[cur][0];
            prev = cur;
            cur = next;
        } while (cur != start);
        lengths.push_back(length);
    }
    std::sort(lengths.begin(), lengths.end());
    return lengths;
}

CutReport reduce_and_cut(int M, std::size_t keep_layer, int x0, int y0) {
    SuperAdjacency super = build_torus_supergraph(M);
    check_layer(super.block_side(), keep_layer);
    if (x0 < 0 || x0 >= M || y0 < 0 || y0 >= M) {
        throw_config("invalid_meridian", "meridian (" + std::to_string(x0) + "," + std::to_string(y0) +
                                             ") outside 0.." + std::to_string(M - 1));
    }
    MacronodeCoords chart = coordinates(M);

    CutReport out;
    out.M = M;
    out.keep_layer = keep_layer;
    out.x0 = x0;
    out.y0 = y0;
    for (std::size_t m = 0; m < super.n_macro(); ++m) {
        if (chart.xy[m][0] == x0 || chart.xy[m][1] == y0) {
            out.cut_macronodes.push_back(m);
        }
    }
    out.measured = nodes_outside_layer(super.n_macro(), super.block_side(), keep_layer);
    for (std::size_t m : out.cut_macronodes) {
        out.measured.push_back(m * super.block_side() + keep_layer);
    }
    std::sort(out.measured.begin(), out.measured.end());
    PhysAdjacency full = expand(super);
    out.kept = complement_of(full.size(), out.measured);
    out.remaining = ideal_graph_delete(full, out.measured);
    out.census = census(out.remaining);
    out.x_axis_cycles = axis_cycle_lengths(M, 0);
    out.y_axis_cycles = axis_cycle_lengths(M, 1);
    return out;
}

GaussianCutReport reduce_and_cut_gaussian(int M, std::size_t keep_layer, int x0, int y0, double squeeze_r) {
    GaussianCutReport out;
    out.cut = reduce_and_cut(M, keep_layer, x0, y0);
    PhysAdjacency full = expand(build_torus_supergraph(M));
    std::vector<std::size_t> layers = nodes_outside_layer(static_cast<std::size_t>(M) * M, 4, keep_layer);
    out.pre_cut = reduce_by_measurement(full, layers, squeeze_r);
    out.post_cut = reduce_by_measurement(full, out.cut.measured, squeeze_r);
    return out;
}

}  // namespace cvcomb
