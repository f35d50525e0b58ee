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

#include <gtest/gtest.h>

#include <filesystem>
#include <map>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    args.insert(args.begin(), "cvcomb");
    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out, err;
    int code = cvcomb::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::size_t count_lines(const std::string &text, const std::string &prefix) {
    std::istringstream in(text);
    std::string line;
    std::size_t n = 0;
    while (std::getline(in, line)) {
        n += line.rfind(prefix, 0) == 0;
    }
    return n;
}

std::map<std::string, std::string> read_dir(const std::filesystem::path &dir) {
    std::map<std::string, std::string> files;
    for (const auto &entry : std::filesystem::directory_iterator(dir)) {
        std::ifstream f(entry.path(), std::ios::binary);
        std::stringstream ss;
        ss << f.rdbuf();
        files[entry.path().filename().string()] = ss.str();
    }
    return files;
}

}  // namespace

TEST(cli, lattice_report) {
    Outcome r = run({"lattice", "--M", "6"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("orthogonal=true bicolorable=true degree=4"), std::string::npos) << r.out;
    EXPECT_TRUE(r.err.empty());
}

TEST(cli, pump_emits_fifteen_lines) {
    Outcome r = run({"pump", "--M", "6"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(count_lines(r.out, "d="), 15u);
}

TEST(cli, pump_M4_cites_negative_run_length) {
    Outcome r = run({"pump", "--M", "4"});
    EXPECT_EQ(r.code, 2);
    EXPECT_EQ(count_lines(r.err, "error kind=config cause=t_negative "), 1u) << r.err;
    EXPECT_NE(r.err.find("t=-3"), std::string::npos);
    EXPECT_TRUE(r.out.empty());
}

TEST(cli, odd_M_is_config_error) {
    for (const char *cmd : {"lattice", "pump", "verify"}) {
        Outcome r = run({cmd, "--M", "5"});
        EXPECT_EQ(r.code, 2) << cmd;
        EXPECT_EQ(r.err.rfind("error kind=config cause=odd_M ", 0), 0u) << r.err;
        EXPECT_EQ(count_lines(r.err, ""), 1u);
    }
}

TEST(cli, scaling_table) {
    Outcome r = run({"scaling", "--M", "6,8,10"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("\n6 36 144 72 1152 15 "), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("\n8 64 256 128 2048 15 "), std::string::npos);
    EXPECT_NE(r.out.find("\n10 100 400 200 3200 15 "), std::string::npos);
}

TEST(cli, ring_reports_block_hankel_finding) {
    Outcome four = run({"ring", "--n-macro", "4"});
    EXPECT_EQ(four.code, 0);
    EXPECT_NE(four.out.find("block_hankel=true nonzero_blocks=3 pump_lines=3"), std::string::npos) << four.out;
    Outcome six = run({"ring", "--n-macro", "6"});
    EXPECT_EQ(six.code, 0);
    EXPECT_NE(six.out.find("block_hankel=false"), std::string::npos);
    Outcome odd = run({"ring", "--n-macro", "5"});
    EXPECT_EQ(odd.code, 2);
    EXPECT_EQ(odd.err.rfind("error kind=config cause=odd_ring ", 0), 0u);
}

TEST(cli, simulate_and_reduce) {
    Outcome sim = run({"simulate", "--n-macro", "4", "--r", "1,2"});
    EXPECT_EQ(sim.code, 0) << sim.err;
    EXPECT_NE(sim.out.find("r=1 turns=1 sign=-1 max=0.0676676416183"), std::string::npos) << sim.out;
    Outcome red = run({"reduce", "--M", "6", "--r", "2", "--keep-layer", "1", "--meridians", "2,3"});
    EXPECT_EQ(red.code, 0) << red.err;
    EXPECT_NE(red.out.find("ideal_cut cut_macronodes=11 nodes=25"), std::string::npos) << red.out;
    EXPECT_EQ(count_lines(red.out, "post_cut r=2"), 1u);
}

TEST(cli, argument_errors) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"lattice"}).code, 2);
    Outcome bad = run({"lattice", "--M", "six"});
    EXPECT_EQ(bad.code, 2);
    EXPECT_EQ(bad.err.rfind("error kind=config cause=bad_arguments ", 0), 0u);
    EXPECT_EQ(count_lines(bad.err, ""), 1u);
    EXPECT_EQ(run({"simulate", "--M", "6"}).code, 2);
    EXPECT_EQ(run({"simulate", "--M", "6", "--r", "-1"}).code, 2);
    EXPECT_EQ(run({"reduce", "--M", "6", "--keep-layer", "4"}).code, 2);
    EXPECT_EQ(run({"reduce", "--M", "6", "--meridians", "1"}).code, 2);
    EXPECT_EQ(run({"lattice", "--M", "6", "--formats", "pdf"}).code, 2);
}

TEST(cli, help_succeeds) {
    Outcome r = run({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("lattice"), std::string::npos);
    Outcome sub = run({"pump", "--help"});
    EXPECT_EQ(sub.code, 0);
    EXPECT_NE(sub.out.find("pump line"), std::string::npos);
}

TEST(cli, outputs_are_byte_deterministic) {
    auto base = std::filesystem::temp_directory_path() / "cvcomb_cli_test";
    std::filesystem::remove_all(base);
    for (const char *sub : {"a", "b"}) {
        auto dir = (base / sub).string();
        EXPECT_EQ(run({"lattice", "--M", "6", "--out", dir}).code, 0);
        EXPECT_EQ(run({"pump", "--M", "6", "--out", dir}).code, 0);
        EXPECT_EQ(run({"simulate", "--M", "6", "--r", "1,2", "--out", dir}).code, 0);
        EXPECT_EQ(run({"reduce", "--M", "6", "--r", "1,2", "--out", dir}).code, 0);
        EXPECT_EQ(run({"scaling", "--M", "6,8", "--out", dir}).code, 0);
    }
    auto a = read_dir(base / "a");
    auto b = read_dir(base / "b");
    EXPECT_GT(a.size(), 15u);
    EXPECT_EQ(a, b);
    EXPECT_TRUE(a.count("pump_M6.txt"));
    EXPECT_TRUE(a.count("lattice_M6.triplets"));
    EXPECT_TRUE(a.count("nullifiers_lattice_M6_r2.txt"));
    std::filesystem::remove_all(base);
}

TEST(cli, verify_reports_every_criterion) {
    Outcome first = run({"verify"});
    Outcome second = run({"verify"});
    EXPECT_EQ(first.out, second.out);
    EXPECT_EQ(count_lines(first.out, "PASS ") + count_lines(first.out, "FAIL "), 9u);
    // The 2x2 layout check is expected to fail; see the README.
    EXPECT_EQ(first.code, 3);
    EXPECT_EQ(count_lines(first.out, "FAIL 2 "), 1u);
    EXPECT_EQ(count_lines(first.out, "FAIL "), 1u);
}
