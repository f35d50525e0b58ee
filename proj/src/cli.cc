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

#include "cvcomb/cli.h"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cvcomb/error.h"
#include "cvcomb/gaussian.h"
#include "cvcomb/hankel.h"
#include "cvcomb/io.h"
#include "cvcomb/lattice.h"
#include "cvcomb/reduce.h"
#include "cvcomb/verify.h"

namespace cvcomb {

namespace {

using Files = std::vector<std::pair<std::string, std::string>>;

const std::set<std::string> kFormats = {"triplet", "dot", "pumpfile", "report"};

struct Options {
    std::vector<int> Ms;
    int n_macro = 0;
    std::vector<double> rs;
    std::size_t keep_layer = 0;
    std::vector<int> meridians = {0, 0};
    std::string out_dir;
    std::vector<std::string> formats = {"triplet", "dot", "pumpfile", "report"};

    bool wants(const std::string &format) const {
        return std::find(formats.begin(), formats.end(), format) != formats.end();
    }
};

const char *kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::kConfig:
            return "config";
        case ErrorKind::kValidation:
            return "validation";
        default:
            return "invariant";
    }
}

std::string quoted(std::string text) {
    std::replace(text.begin(), text.end(), '\n', ' ');
    std::string out = "\"";
    for (char c : text) {
        if (c == '"' || c == '\\') {
            out += '\\';
        }
        out += c;
    }
    return out + "\"";
}

int single_M(const Options &opt) {
    if (opt.Ms.size() != 1) {
        throw_config("bad_M", "exactly one --M value is required for this command");
    }
    return opt.Ms.front();
}

void check_formats(const Options &opt) {
    for (const auto &f : opt.formats) {
        if (!kFormats.count(f)) {
            throw_config("bad_format", "unknown format '" + f + "'; choose from triplet, dot, pumpfile, report");
        }
    }
}

std::vector<double> checked_rs(const Options &opt) {
    if (opt.rs.empty()) {
        throw_config("missing_r", "at least one --r value is required");
    }
    for (double r : opt.rs) {
        if (!(r >= 0.0) || !std::isfinite(r)) {
            throw_config("negative_r", "squeeze_r must be finite and nonnegative");
        }
    }
    return opt.rs;
}

std::string lattice_report(int M, const SuperAdjacency &super, const PhysAdjacency &phys) {
    OrthogonalityReport orth = check_orthogonal(phys);
    bool bicolorable = true;
    try {
        bicoloring(phys);
    } catch (const Error &) {
        bicolorable = false;
    }
    std::map<std::size_t, std::size_t> macro_degrees;
    for (std::size_t i = 0; i < super.n_macro(); ++i) {
        ++macro_degrees[super.degree(i)];
    }
    std::map<std::string, std::size_t> labels;
    for (const auto &[ij, w] : super.upper_blocks()) {
        ++labels[block_label(w)];
    }
    std::ostringstream out;
    out << "macronodes=" << super.n_macro() << " physical_nodes=" << phys.size()
        << " superedges=" << super.edge_count() << " physical_edges=" << phys.edge_count() << '\n';
    out << "orthogonal=" << (orth.is_orthogonal ? "true" : "false") << " bicolorable=" << (bicolorable ? "true" : "false");
    if (macro_degrees.size() == 1) {
        out << " degree=" << macro_degrees.begin()->first;
    } else {
        out << " degree=mixed";
    }
    out << " worst_deviation=" << orth.worst_deviation.str() << " self_loops=" << (orth.has_self_loops ? "true" : "false")
        << '\n';
    out << "degree_census";
    for (const auto &[d, count] : macro_degrees) {
        out << ' ' << d << ':' << count;
    }
    out << '\n' << "label_census";
    for (const auto &[label, count] : labels) {
        out << ' ' << label << ':' << count;
    }
    out << '\n' << "physical " << write_census(census(phys));
    if (M > 0) {
        out << "chart " << MacronodeCoords::convention() << '\n';
        std::vector<std::size_t> xs = axis_cycle_lengths(M, 0);
        std::vector<std::size_t> ys = axis_cycle_lengths(M, 1);
        out << "axis_cycles x_count=" << xs.size() << " x_length=" << xs.front() << " y_count=" << ys.size()
            << " y_length=" << ys.front() << '\n';
    }
    return out.str();
}

std::string run_lattice(const Options &opt, Files &files) {
    const int M = single_M(opt);
    SuperAdjacency super = build_torus_supergraph(M);
    PhysAdjacency phys = expand(super);
    std::string tag = "lattice_M" + std::to_string(M);
    std::string report = "command=lattice M=" + std::to_string(M) + '\n' + lattice_report(M, super, phys);
    if (opt.wants("triplet")) {
        files.emplace_back(tag + ".triplets", write_triplets(phys));
        files.emplace_back(tag + "_super.triplets", write_super_triplets(super));
    }
    if (opt.wants("dot")) {
        files.emplace_back(tag + ".dot", write_dot(phys, tag));
    }
    if (opt.wants("report")) {
        files.emplace_back(tag + "_report.txt", report);
    }
    return report;
}

std::string run_ring(const Options &opt, Files &files) {
    SuperAdjacency super = build_ring_supergraph(opt.n_macro);
    PhysAdjacency phys = expand(super);
    std::string tag = "ring_n" + std::to_string(opt.n_macro);
    std::string report = "command=ring n_macro=" + std::to_string(opt.n_macro) + '\n' + lattice_report(0, super, phys);
    try {
        HankelShorthand sh = shorthand_of(phys, 2);
        PumpSpectrum pump = compile_pump(sh);
        report += "block_hankel=true nonzero_blocks=" + std::to_string(sh.nonzero_count()) +
                  " pump_lines=" + std::to_string(pump.lines.size()) + '\n';
        if (opt.wants("pumpfile")) {
            files.emplace_back(tag + "_shorthand.txt", write_shorthand(sh));
            files.emplace_back(tag + "_pump.txt", write_pump(pump));
        }
    } catch (const NotHankel &e) {
        report += "block_hankel=false first_violation=(" + std::to_string(e.first.first) + "," +
                  std::to_string(e.first.second) + ") second_violation=(" + std::to_string(e.second.first) + "," +
                  std::to_string(e.second.second) + ")\n";
    }
    if (opt.wants("triplet")) {
        files.emplace_back(tag + ".triplets", write_triplets(phys));
        files.emplace_back(tag + "_super.triplets", write_super_triplets(super));
    }
    if (opt.wants("dot")) {
        files.emplace_back(tag + ".dot", write_dot(phys, tag));
    }
    if (opt.wants("report")) {
        files.emplace_back(tag + "_report.txt", report);
    }
    return report;
}

std::string run_pump(const Options &opt, Files &files) {
    const int M = single_M(opt);
    PhysAdjacency phys = expand(build_torus_supergraph(M));
    Renumbering ren = renumber_to_block_hankel(phys, M);
    HankelShorthand sh = shorthand_of(ren.renumbered, 2);
    PumpSpectrum pump = compile_pump(sh);
    std::string tag = "M" + std::to_string(M);
    std::string pumpfile = write_pump(pump);
    std::string report = "command=pump M=" + std::to_string(M) + " pump_lines=" + std::to_string(pump.lines.size()) +
                         " bandwidth_span=" + std::to_string(pump.bandwidth_span) + '\n' + pumpfile;
    if (opt.wants("pumpfile")) {
        files.emplace_back("shorthand_" + tag + ".txt", write_shorthand(sh));
        files.emplace_back("pump_" + tag + ".txt", pumpfile);
    }
    if (opt.wants("triplet")) {
        files.emplace_back("renumbered_" + tag + ".triplets", write_triplets(ren.renumbered));
        std::string perm = "n=" + std::to_string(ren.new_of_old.size()) + " old new\n";
        for (std::size_t k = 0; k < ren.new_of_old.size(); ++k) {
            perm += std::to_string(k) + ' ' + std::to_string(ren.new_of_old[k]) + '\n';
        }
        files.emplace_back("permutation_" + tag + ".txt", perm);
    }
    if (opt.wants("report")) {
        files.emplace_back("pump_" + tag + "_report.txt", report);
    }
    return report;
}

std::string run_simulate(const Options &opt, Files &files) {
    if (opt.Ms.empty() == (opt.n_macro == 0)) {
        throw_config("bad_graph", "give exactly one of --M (torus lattice) or --n-macro (ring)");
    }
    const std::vector<double> rs = checked_rs(opt);
    PhysAdjacency phys;
    std::string tag;
    if (!opt.Ms.empty()) {
        int M = single_M(opt);
        phys = expand(build_torus_supergraph(M));
        tag = "lattice_M" + std::to_string(M);
    } else {
        phys = expand(build_ring_supergraph(opt.n_macro));
        tag = "ring_n" + std::to_string(opt.n_macro);
    }
    const Eigen::MatrixXd a = phys.to_real();
    Bicoloring coloring = bicoloring(phys);
    std::string report = "command=simulate graph=" + tag + " modes=" + std::to_string(phys.size()) + '\n';
    for (double r : rs) {
        GaussianState state = evolve(EvolutionParams{r, a});
        PhaseChoice choice = best_phase_convention(state, coloring, a, r);
        report += "r=" + format_double(r) + " turns=" + std::to_string(choice.quarter_turns) +
                  " sign=" + std::to_string(choice.target_sign) + " max=" + format_double(choice.report.max_variance) +
                  " max_raw=" + format_double(choice.report.max_raw_variance) +
                  " expected=" + format_double(0.5 * std::exp(-2.0 * r)) +
                  " purity_det=" + format_double(state.purity_det()) + '\n';
        if (opt.wants("report")) {
            std::string base = "nullifiers_" + tag + "_r" + format_double(r);
            files.emplace_back(base + ".txt", write_nullifier_table(choice.report));
            files.emplace_back(base + ".kv", write_nullifier_records(choice.report));
        }
    }
    return report;
}

std::string run_reduce(const Options &opt, Files &files) {
    const int M = single_M(opt);
    if (opt.meridians.size() != 2) {
        throw_config("invalid_meridian", "--meridians takes exactly two values x0,y0");
    }
    const std::vector<double> rs = checked_rs(opt);
    CutReport cut = reduce_and_cut(M, opt.keep_layer, opt.meridians[0], opt.meridians[1]);
    std::string tag = "M" + std::to_string(M) + "_layer" + std::to_string(opt.keep_layer);
    std::ostringstream out;
    out << "command=reduce M=" << M << " keep_layer=" << opt.keep_layer << " meridians=" << cut.x0 << ',' << cut.y0
        << '\n';
    out << "chart " << MacronodeCoords::convention() << '\n';
    out << "axis_cycles x=" << cut.x_axis_cycles.size() << 'x' << cut.x_axis_cycles.front()
        << " y=" << cut.y_axis_cycles.size() << 'x' << cut.y_axis_cycles.front() << '\n';
    out << "ideal_cut cut_macronodes=" << cut.cut_macronodes.size() << ' ' << write_census(cut.census);
    for (double r : rs) {
        GaussianCutReport g = reduce_and_cut_gaussian(M, opt.keep_layer, cut.x0, cut.y0, r);
        for (const auto *red : {&g.pre_cut, &g.post_cut}) {
            const char *stage = red == &g.pre_cut ? "pre_cut" : "post_cut";
            out << stage << " r=" << format_double(r) << " kept=" << red->kept.size()
                << " max_residual=" << format_double(red->residuals.max_variance)
                << " max_raw_residual=" << format_double(red->residuals.max_raw_variance)
                << " effective_graph_error=" << format_double(red->effective_graph_error)
                << " turns=" << red->quarter_turns << " sign=" << red->target_sign << '\n';
            if (opt.wants("report")) {
                std::string base = std::string(stage) + "_" + tag + "_r" + format_double(r);
                files.emplace_back(base + "_nullifiers.txt", write_nullifier_table(red->residuals));
                files.emplace_back(base + "_effective.txt", write_effective_graph(effective_graph(red->state)));
            }
        }
    }
    if (opt.wants("triplet")) {
        files.emplace_back("cut_" + tag + ".triplets", write_triplets(cut.remaining));
    }
    if (opt.wants("dot")) {
        files.emplace_back("cut_" + tag + ".dot", write_dot(cut.remaining, "cut_" + tag));
    }
    if (opt.wants("report")) {
        files.emplace_back("reduce_" + tag + "_report.txt", out.str());
    }
    return out.str();
}

std::string run_scaling(const Options &opt, Files &files) {
    if (opt.Ms.empty()) {
        throw_config("bad_M", "--M needs at least one value");
    }
    std::ostringstream out;
    out << "M N physical_modes superedges physical_edges pump_lines bandwidth_span comb_lines\n";
    for (const auto &row : scaling_report(opt.Ms)) {
        out << row.M << ' ' << row.macronodes << ' ' << row.physical_modes << ' ' << row.superedges << ' '
            << row.physical_edges << ' ' << row.pump_lines << ' ' << row.bandwidth_span << ' ' << row.comb_lines
            << '\n';
    }
    if (opt.wants("report")) {
        files.emplace_back("scaling.txt", out.str());
    }
    return out.str();
}

std::string run_verify(const Options &opt, Files &files, bool &all_pass) {
    VerifyConfig config;
    if (!opt.Ms.empty()) {
        config.M = single_M(opt);
    }
    if (!opt.rs.empty()) {
        config.rs = checked_rs(opt);
    }
    config.keep_layer = opt.keep_layer;
    if (opt.meridians.size() != 2) {
        throw_config("invalid_meridian", "--meridians takes exactly two values x0,y0");
    }
    config.x0 = opt.meridians[0];
    config.y0 = opt.meridians[1];
    // Fail fast on the configuration before the long checks run.
    reduce_and_cut(config.M, config.keep_layer, config.x0, config.y0);
    std::string report = verify_all(config, &all_pass);
    if (opt.wants("report")) {
        files.emplace_back("verify_report.txt", report);
    }
    return report;
}

void write_files(const std::string &dir, const Files &files) {
    if (dir.empty()) {
        return;
    }
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        throw_config("output_dir", "cannot create '" + dir + "': " + ec.message());
    }
    for (const auto &[name, content] : files) {
        std::filesystem::path path = std::filesystem::path(dir) / name;
        std::ofstream f(path, std::ios::binary);
        f << content;
        if (!f) {
            throw_config("output_dir", "cannot write '" + path.string() + "'");
        }
    }
}

}  // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"cvcomb: builds orthogonal matrix-weighted cluster-state graphs, compiles them to frequency-comb pump\n"
                 "spectra, and checks the resulting Gaussian states by simulation."};
    app.require_subcommand(1);
    Options opt;

    auto add_out = [&](CLI::App *sub) {
        sub->add_option("--out", opt.out_dir, "Directory for output files (created if missing)");
        sub->add_option("--formats", opt.formats, "Comma list drawn from triplet,dot,pumpfile,report")
            ->delimiter(',');
    };
    auto add_M = [&](CLI::App *sub, bool required) {
        auto *o = sub->add_option("--M", opt.Ms, "Torus side M (even); comma list for scaling")->delimiter(',');
        if (required) {
            o->required();
        }
    };
    auto add_r = [&](CLI::App *sub) {
        sub->add_option("--r", opt.rs, "Squeezing parameters r = kappa t, comma separated")->delimiter(',');
    };
    auto add_reduce = [&](CLI::App *sub) {
        sub->add_option("--keep-layer", opt.keep_layer, "Layer 0..3 left unmeasured");
        sub->add_option("--meridians", opt.meridians, "Chart column and row x0,y0 measured to open the torus")
            ->delimiter(',');
    };

    auto *lattice = app.add_subcommand(
        "lattice",
        "Build the twisted-torus lattice on M^2 macronodes of four physical nodes each. Edge weights are the\n"
        "rank-one projectors P0..P3 (entries +-1/4), placed by a block-Hankel shorthand with run lengths M-1\n"
        "and M^2-2M-3. Reports exact orthogonality (A^2 = 1), bicolorability and the degree census.");
    add_M(lattice, true);
    add_out(lattice);

    auto *ring = app.add_subcommand(
        "ring",
        "Build the ring supergraph of two-node macronodes joined alternately by pi+ and pi-, expand it to the\n"
        "crown graph, validate it, and report whether its natural numbering is 2x2 block-Hankel.");
    ring->add_option("--n-macro", opt.n_macro, "Number of macronodes (even, >= 4)")->required();
    add_out(ring);

    auto *pump = app.add_subcommand(
        "pump",
        "Renumber the torus lattice so that its adjacency is 2x2 block-Hankel, then compile each nonzero\n"
        "shorthand block +-(1/2) pi+- into one pump line: frequency index d = m + n of the coupled comb lines,\n"
        "polarization +45 for pi+ and -45 for pi-, and a 180 degree Y phase for the sign.");
    add_M(pump, true);
    add_out(pump);

    auto *simulate = app.add_subcommand(
        "simulate",
        "Evolve vacuum under H = (i kappa/2) sum_mn A_mn (a_m^+ a_n^+ - a_m a_n) for r = kappa t, rotate one\n"
        "color class by a quarter turn, and report the variances of the nullifiers p - A q.");
    add_M(simulate, false);
    simulate->add_option("--n-macro", opt.n_macro, "Simulate the ring of this size instead of the lattice");
    add_r(simulate);
    add_out(simulate);

    auto *reduce = app.add_subcommand(
        "reduce",
        "Measure q on every physical node outside one layer, then on the kept-layer nodes of one chart column\n"
        "and row. Reports the ideal remaining graph and the Gaussian residuals before and after the cut.");
    add_M(reduce, true);
    add_r(reduce);
    add_reduce(reduce);
    add_out(reduce);

    auto *scaling = app.add_subcommand(
        "scaling", "Tabulate node, edge and pump-line counts of the compiled lattice for each M.");
    add_M(scaling, true);
    add_out(scaling);

    auto *verify = app.add_subcommand(
        "verify", "Run every acceptance check and print one PASS or FAIL line per criterion.");
    add_M(verify, false);
    add_r(verify);
    add_reduce(verify);
    add_out(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e, out, err);
        }
        err << "error kind=config cause=bad_arguments message=" << quoted(e.what()) << '\n';
        return exit_code_for(ErrorKind::kConfig);
    }

    try {
        check_formats(opt);
        Files files;
        std::string report;
        bool all_pass = true;
        if (lattice->parsed()) {
            report = run_lattice(opt, files);
        } else if (ring->parsed()) {
            report = run_ring(opt, files);
        } else if (pump->parsed()) {
            report = run_pump(opt, files);
        } else if (simulate->parsed()) {
            report = run_simulate(opt, files);
        } else if (reduce->parsed()) {
            if (opt.rs.empty()) {
                opt.rs = {1, 2};
            }
            report = run_reduce(opt, files);
        } else if (scaling->parsed()) {
            report = run_scaling(opt, files);
        } else {
            report = run_verify(opt, files, all_pass);
        }
        write_files(opt.out_dir, files);
        out << report;
        if (!all_pass) {
            err << "error kind=validation cause=criterion_failed message=\"one or more acceptance criteria failed\"\n";
            return exit_code_for(ErrorKind::kValidation);
        }
        return 0;
    } catch (const Error &e) {
        err << "error kind=" << kind_name(e.kind()) << " cause=" << e.cause() << " message=" << quoted(e.what())
            << '\n';
        return exit_code_for(e.kind());
    } catch (const std::exception &e) {
        err << "error kind=invariant cause=unexpected message=" << quoted(e.what()) << '\n';
        return exit_code_for(ErrorKind::kInvariant);
    }
}

}  // namespace cvcomb
