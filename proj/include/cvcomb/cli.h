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

#ifndef CVCOMB_CLI_H
#define CVCOMB_CLI_H

#include <ostream>

namespace cvcomb {

/// Entry point for the `cvcomb` tool. Reports go to `out`; on failure a single
/// line `error kind=<kind> cause=<cause> message="<text>"` goes to `err`.
/// Returns 0 on success, 2 for configuration errors, 3 for validation failures
/// (including failing acceptance criteria under `verify`) and 4 for internal
/// invariant breaches.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace cvcomb

#endif
