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

#ifndef CVCOMB_IO_H
#define CVCOMB_IO_H

#include <Eigen/Core>
#include <cstdint>
#include <string>

#include "cvcomb/gaussian.h"
#include "cvcomb/hankel.h"
#include "cvcomb/lattice.h"
#include "cvcomb/reduce.h"

namespace cvcomb {

/// 12 significant digits, "%.12g"; -0 prints as 0.
std::string format_double(double value);

/// 64-bit FNV-1a, 16 hex digits.
std::string text_hash(const std::string &text);

/// text_hash of the row-major text of a matrix; 16 hex digits.
std::string matrix_hash(const Eigen::MatrixXd &m);

// Text formats. Every writer returns the full file contents ending in a newline;
// output depends only on the argument.

/// Header `n=<count> denom=4`, then `i j <num>/4` for each upper-triangle nonzero.
std::string write_triplets(const PhysAdjacency &adjacency);
PhysAdjacency read_triplets(const std::string &text);

std::string write_dot(const PhysAdjacency &adjacency, const std::string &name);

/// Header `n=<n_macro> denom=4 block_side=<b>`, then `i j <label>` per superedge.
std::string write_super_triplets(const SuperAdjacency &super);

/// Header `length=<L> corner_index=<c> block_side=<b>`, then `<index> <label>` per entry.
std::string write_shorthand(const HankelShorthand &shorthand);

/// Header `n_qumodes=<n> block_side=2 sign_convention=<text>`, then
/// `d=<int> amp=<decimal> pol=<+45|-45> yphase=<0|180>` per line.
std::string write_pump(const PumpSpectrum &spectrum);

/// `i variance` rows, then `r=<val> max=<val> target=<hash>`.
std::string write_nullifier_table(const NullifierReport &report);

/// One `key=value ...` record per mode, then a summary record.
std::string write_nullifier_records(const NullifierReport &report);

/// Header `rows=<r> cols=<c>`, then one space-separated row per line.
std::string write_matrix(const Eigen::MatrixXd &m);

std::string write_effective_graph(const EffectiveGraph &graph);

std::string write_census(const GraphCensus &census);

}  // namespace cvcomb

#endif
