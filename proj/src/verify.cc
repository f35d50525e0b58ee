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

#include "cvcomb/verify.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "cvcomb/error.h"
#include "cvcomb/gaussian.h"
#include "cvcomb/hankel.h"
#include "cvcomb/io.h"
#include "cvcomb/lattice.h"
#include "cvcomb/oracle.h"
#include "cvcomb/reduce.h"

namespace cvcomb {

namespace {

constexpr double kOracleTol = 1e-10;
constexpr double kNullifierTol = 1e-6;

struct Builder {
    CriterionResult result;
    bool ok = true;

    void line(const std::string &text) {
        result.details.push_back(text);
    }
    void check(bool condition, const std::string &text) {
        line(std::string(condition ? "ok   " : "bad  ") + text);
        ok = ok && condition;
    }
};

std::string yes(bool b) {
    return b ? "true" : "false";
}

std::string join_sizes(const std::vector<std::size_t> &v) {
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k) {
        s += (k ? "," : "") + std::to_string(v[k]);
    }
    return s;
}

bool strictly_decreasing(const std::vector<double> &v) {
    for (std::size_t k = 1; k < v.size(); ++k) {
        if (!(v[k] < v[k - 1])) {
            return false;
        }
    }
    return true;
}

std::vector<double> sorted_rs(const VerifyConfig &config) {
    std::vector<double> rs = config.rs;
    std::sort(rs.begin(), rs.end());
    if (rs.size() < 2) {
        throw_config("too_few_r", "the reduction checks need at least two squeezing values");
    }
    return rs;
}

PhysAdjacency two_mode_graph() {
    return PhysAdjacency::from_triplets(2, {{0, 1, kQuarter}});
}

// 0/1 support of a 2x2 block layout with full blocks at the listed skew diagonals.
ExactMatrix layout_support(const TwoBlockLayout &layout) {
    const auto nb = static_cast<Eigen::Index>((layout.length + 1) / 2);
    ExactMatrix s = ExactMatrix::Zero(2 * nb, 2 * nb);
    for (const auto &[pos, pattern] : layout.nonzero) {
        for (Eigen::Index r = 0; r < nb; ++r) {
            Eigen::Index c = static_cast<Eigen::Index>(pos) - r;
            if (c >= 0 && c < nb) {
                s.block(2 * r, 2 * c, 2, 2).setOnes();
            }
        }
    }
    return s;
}

// trace(S^k): closed walks of length k, a permutation invariant of the support.
std::int64_t closed_walks(const ExactMatrix &s, int k) {
    ExactMatrix p = ExactMatrix::Identity(s.rows(), s.cols());
    for (int i = 0; i < k; ++i) {
        p = p * s;
    }
    return p.trace();
}

void criterion_orthogonality(Builder &b, const VerifyConfig &) {
    for (int M : {6, 8}) {
        PhysAdjacency a = expand(build_torus_supergraph(M));
        OrthogonalityReport rep = check_orthogonal(a);
        b.check(rep.is_orthogonal && !rep.has_self_loops,
                "M=" + std::to_string(M) + " nodes=" + std::to_string(a.size()) + " orthogonal=" +
                    yes(rep.is_orthogonal) + " worst_deviation=" + rep.worst_deviation.str());
    }
}

void criterion_block_hankel(Builder &b, const VerifyConfig &config) {
    const int M = config.M;
    PhysAdjacency a = expand(build_torus_supergraph(M));
    Renumbering ren = renumber_to_block_hankel(a, M);
    HankelShorthand sh = shorthand_of(ren.renumbered, 2);
    b.check(true, "renumbered matrix is 2x2 block-Hankel, shorthand length=" + std::to_string(sh.entries.size()));
    b.check(sh.nonzero_count() == 15, "nonzero blocks=" + std::to_string(sh.nonzero_count()));

    bool all_projectors = true;
    std::vector<std::pair<std::size_t, Pattern>> observed;
    std::string labels;
    for (std::size_t d = 0; d < sh.entries.size(); ++d) {
        BlockWeight w(sh.entries[d]);
        if (w.is_zero()) {
            continue;
        }
        auto scaled = as_scaled_projector2(w);
        all_projectors = all_projectors && scaled.has_value();
        if (scaled) {
            observed.emplace_back(d, scaled->first);
        }
        labels += (labels.empty() ? "" : " ") + std::to_string(d) + ":" + block_label(w);
    }
    b.check(all_projectors, "every nonzero block is +-(1/2) pi+ or +-(1/2) pi-");
    b.line("     observed " + labels);

    auto positions = [](const TwoBlockLayout &layout) {
        std::vector<std::size_t> p;
        for (const auto &[pos, pattern] : layout.nonzero) {
            p.push_back(pos);
        }
        return p;
    };
    std::vector<std::size_t> observed_pos;
    for (const auto &[pos, pattern] : observed) {
        observed_pos.push_back(pos);
    }
    TwoBlockLayout nominal = nominal_two_block_layout(M);
    TwoBlockLayout regrouped = regrouped_two_block_layout(M);
    b.check(observed_pos == positions(nominal), "positions match run lengths s=" + std::to_string(nominal.s) +
                                                    " t=" + std::to_string(nominal.t) + " (" +
                                                    join_sizes(positions(nominal)) + ")");
    b.line("     observed positions " + join_sizes(observed_pos) + " are run lengths s=" + std::to_string(regrouped.s) +
           " t=" + std::to_string(regrouped.t) + ": " + yes(observed_pos == positions(regrouped)));

    // A renumbering preserves the support graph, whatever the signs and scale of the blocks.
    ExactMatrix lattice_support = a.to_dense().cwiseAbs().cwiseMin(1);
    ExactMatrix nominal_support = layout_support(nominal);
    for (int k : {2, 4, 6}) {
        std::int64_t got = closed_walks(lattice_support, k);
        std::int64_t want = closed_walks(nominal_support, k);
        b.line("     closed walks of length " + std::to_string(k) + ": lattice=" + std::to_string(got) +
               " s=" + std::to_string(nominal.s) + "/t=" + std::to_string(nominal.t) + " layout=" + std::to_string(want));
    }

    PhysAdjacency back = ren.renumbered.permuted(invert_permutation(ren.new_of_old));
    b.check(back == a, "permutation round trip bit-exact");
}

void criterion_pump_constancy(Builder &b, const VerifyConfig &) {
    std::vector<ScalingRow> rows = scaling_report({6, 8, 10});
    for (const auto &row : rows) {
        std::size_t expected_edges = 32 * row.macronodes;
        b.check(row.pump_lines == 15 && row.physical_edges == expected_edges,
                "M=" + std::to_string(row.M) + " N=" + std::to_string(row.macronodes) +
                    " pump_lines=" + std::to_string(row.pump_lines) + " physical_edges=" +
                    std::to_string(row.physical_edges) + " (32M^2=" + std::to_string(expected_edges) +
                    ") bandwidth_span=" + std::to_string(row.bandwidth_span));
    }
    bool closed_form = true;
    for (const auto &row : rows) {
        closed_form = closed_form && row.bandwidth_span == 4 * static_cast<std::int64_t>(row.macronodes) - row.M - 2;
    }
    b.line("     bandwidth_span = 4N - M - 2 for every M: " + yes(closed_form));
}

double relative_gap(const Eigen::MatrixXd &x, const Eigen::MatrixXd &ref) {
    return (x - ref).cwiseAbs().maxCoeff() / std::max(1.0, ref.cwiseAbs().maxCoeff());
}

void criterion_oracle(Builder &b, const VerifyConfig &) {
    std::mt19937_64 rng(20260101);
    std::uniform_int_distribution<int> size_dist(2, 6);
    std::uniform_real_distribution<double> entry_dist(-0.5, 0.5);
    std::uniform_real_distribution<double> r_dist(0.0, 2.0);

    auto compare = [](const Eigen::MatrixXd &a, double r) {
        Eigen::MatrixXd s = evolution_symplectic(EvolutionParams{r, a});
        Eigen::MatrixXd ref = oracle::evolve_adjacency(a, r).transform;
        double gap = relative_gap(s, ref);
        double cov_gap = relative_gap(0.5 * s * s.transpose(), 0.5 * ref * ref.transpose());
        return std::max(gap, cov_gap);
    };

    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        int n = size_dist(rng);
        Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                a(i, j) = a(j, i) = entry_dist(rng);
            }
        }
        worst = std::max(worst, compare(a, r_dist(rng)));
    }
    b.check(worst <= kOracleTol, "20 random symmetric adjacencies (n<=6, r<=2): worst relative gap=" +
                                     format_double(worst));
    double two_mode = std::max(compare(two_mode_graph().to_real(), 0.5), compare(two_mode_graph().to_real(), 2.0));
    b.check(two_mode <= kOracleTol, "two-mode graph at r=0.5 and r=2: worst relative gap=" + format_double(two_mode));
}

void criterion_cluster_definition(Builder &b, const VerifyConfig &config) {
    struct Case {
        std::string name;
        PhysAdjacency adjacency;
    };
    std::vector<Case> cases = {
        {"two-mode", two_mode_graph()},
        {"ring n=4", expand(build_ring_supergraph(4))},
        {"lattice M=" + std::to_string(config.M), expand(build_torus_supergraph(config.M))},
    };
    for (const auto &c : cases) {
        const Eigen::MatrixXd a = c.adjacency.to_real();
        Bicoloring coloring = bicoloring(c.adjacency);
        std::vector<double> maxima;
        for (double r : {0.5, 1.0, 2.0}) {
            GaussianState state = evolve(EvolutionParams{r, a});
            PhaseChoice choice = best_phase_convention(state, coloring, a, r);
            double expected = 0.5 * std::exp(-2.0 * r);
            double worst = (choice.report.variances.array() - expected).abs().maxCoeff();
            maxima.push_back(choice.report.max_variance);
            b.check(worst <= kNullifierTol, c.name + " r=" + format_double(r) + " modes=" +
                                                std::to_string(a.rows()) + " max=" +
                                                format_double(choice.report.max_variance) + " e^-2r/2=" +
                                                format_double(expected) + " worst_gap=" + format_double(worst) +
                                                " turns=" + std::to_string(choice.quarter_turns) +
                                                " sign=" + std::to_string(choice.target_sign));
        }
        b.check(strictly_decreasing(maxima), c.name + " variances decrease in r");
    }
}

std::string reduction_line(const MeasurementReduction &red) {
    return "r=" + format_double(red.squeeze_r) + " kept=" + std::to_string(red.kept.size()) +
           " max_residual=" + format_double(red.residuals.max_variance) +
           " max_raw_residual=" + format_double(red.residuals.max_raw_variance) +
           " effective_graph_error=" + format_double(red.effective_graph_error) +
           " turns=" + std::to_string(red.quarter_turns) + " sign=" + std::to_string(red.target_sign);
}

void criterion_crown(Builder &b, const VerifyConfig &) {
    std::vector<double> residuals;
    std::vector<double> errors;
    GraphCensus ideal;
    for (double r : {1.0, 2.0, 3.0}) {
        MeasurementReduction red = reduce_ring_top(4, r);
        residuals.push_back(red.residuals.max_variance);
        errors.push_back(red.effective_graph_error);
        ideal = census(red.ideal);
        b.line("     " + reduction_line(red));
    }
    b.check(strictly_decreasing(residuals), "bottom-layer residuals decrease with r");
    b.line("     effective graph error decreasing: " + yes(strictly_decreasing(errors)));
    b.check(ideal.nodes == 4 && ideal.edges == 4 && ideal.max_degree == 2 && ideal.connected(),
            "ideal bottom layer is a 4-cycle: " + write_census(ideal).substr(0, write_census(ideal).size() - 1));
    b.check(ideal.uniform_magnitude == std::optional<std::int64_t>{2}, "ideal ring has uniform |weight| = 1/2");
}

void criterion_lattice_reduction(Builder &b, const VerifyConfig &config) {
    std::vector<double> residuals;
    std::vector<double> errors;
    GraphCensus ideal;
    for (double r : sorted_rs(config)) {
        MeasurementReduction red = reduce_lattice_layers(config.M, config.keep_layer, r);
        residuals.push_back(red.residuals.max_variance);
        errors.push_back(red.effective_graph_error);
        ideal = census(red.ideal);
        b.line("     " + reduction_line(red));
    }
    std::string ideal_text = write_census(ideal);
    b.line("     ideal " + ideal_text.substr(0, ideal_text.size() - 1));
    b.check(strictly_decreasing(residuals), "residuals decrease with r");
    b.check(strictly_decreasing(errors), "effective graph error decreases with r");
    b.check(ideal.uniform_magnitude == std::optional<std::int64_t>{1} &&
                ideal.nodes == static_cast<std::size_t>(config.M * config.M) && ideal.degree_count.size() == 1 &&
                ideal.degree_count.count(4) == 1,
            "ideal layer is 4-regular on N nodes with uniform |weight| = 1/4");
}

void criterion_cut(Builder &b, const VerifyConfig &config) {
    CutReport cut = reduce_and_cut(config.M, config.keep_layer, config.x0, config.y0);
    std::string text = write_census(cut.census);
    b.line("     layer=" + std::to_string(cut.keep_layer) + " meridians=(" + std::to_string(cut.x0) + "," +
           std::to_string(cut.y0) + ") cut_macronodes=" + std::to_string(cut.cut_macronodes.size()));
    b.line("     axis cycles x=[" + join_sizes(cut.x_axis_cycles) + "] y=[" + join_sizes(cut.y_axis_cycles) + "]");
    b.line("     remaining " + text.substr(0, text.size() - 1));
    b.check(cut.census.connected(), "remaining graph connected");
    b.check(cut.census.max_degree <= 4, "remaining max degree <= 4");

    std::vector<double> post;
    for (double r : sorted_rs(config)) {
        GaussianCutReport g = reduce_and_cut_gaussian(config.M, config.keep_layer, config.x0, config.y0, r);
        post.push_back(g.post_cut.residuals.max_variance);
        b.line("     pre-cut  " + reduction_line(g.pre_cut));
        b.line("     post-cut " + reduction_line(g.post_cut));
    }
    b.check(strictly_decreasing(post), "post-cut max residual decreases with r");
}

const char *const kTitles[kCriterionCount] = {
    "exact orthogonality",
    "2x2 block-Hankel structure",
    "pump constancy",
    "evolution oracle",
    "cluster-state nullifiers",
    "crown to ring reduction",
    "lattice layer reduction",
    "torus cut",
    "determinism",
};

CriterionResult run_checked(int id, const VerifyConfig &config, const std::function<void(Builder &)> &body) {
    Builder b;
    b.result.id = id;
    b.result.title = kTitles[id - 1];
    try {
        body(b);
    } catch (const Error &e) {
        b.check(false, "error cause=" + e.cause() + " message=" + e.what());
    }
    (void)config;
    b.result.pass = b.ok;
    return b.result;
}

std::string report_of_first_eight(const VerifyConfig &config) {
    std::vector<CriterionResult> results;
    for (int id = 1; id <= 8; ++id) {
        results.push_back(run_criterion(id, config));
    }
    return render_report(results);
}

}  // namespace

CriterionResult run_criterion(int id, const VerifyConfig &config) {
    if (id < 1 || id > kCriterionCount) {
        throw_config("bad_criterion", "criterion must be 1.." + std::to_string(kCriterionCount));
    }
    switch (id) {
        case 1:
            return run_checked(id, config, [&](Builder &b) { criterion_orthogonality(b, config); });
        case 2:
            return run_checked(id, config, [&](Builder &b) { criterion_block_hankel(b, config); });
        case 3:
            return run_checked(id, config, [&](Builder &b) { criterion_pump_constancy(b, config); });
        case 4:
            return run_checked(id, config, [&](Builder &b) { criterion_oracle(b, config); });
        case 5:
            return run_checked(id, config, [&](Builder &b) { criterion_cluster_definition(b, config); });
        case 6:
            return run_checked(id, config, [&](Builder &b) { criterion_crown(b, config); });
        case 7:
            return run_checked(id, config, [&](Builder &b) { criterion_lattice_reduction(b, config); });
        case 8:
            return run_checked(id, config, [&](Builder &b) { criterion_cut(b, config); });
        default:
            return run_checked(id, config, [&](Builder &b) {
                std::string first = report_of_first_eight(config);
                std::string second = report_of_first_eight(config);
                b.check(first == second, "two runs of criteria 1-8 byte-identical (" +
                                             std::to_string(first.size()) + " bytes, hash " + text_hash(first) + ")");
            });
    }
}

std::string render_report(const std::vector<CriterionResult> &results) {
    std::ostringstream out;
    for (const auto &r : results) {
        out << "[criterion " << r.id << "] " << r.title << '\n';
        for (const auto &d : r.details) {
            out << "  " << d << '\n';
        }
    }
    for (const auto &r : results) {
        out << (r.pass ? "PASS " : "FAIL ") << r.id << ' ' << r.title << '\n';
    }
    return out.str();
}

std::string verify_all(const VerifyConfig &config, bool *all_pass) {
    std::vector<CriterionResult> results;
    bool ok = true;
    for (int id = 1; id <= kCriterionCount; ++id) {
        results.push_back(run_criterion(id, config));
        ok = ok && results.back().pass;
    }
    if (all_pass) {
        *all_pass = ok;
    }
    return render_report(results);
}

}  // namespace cvcomb
