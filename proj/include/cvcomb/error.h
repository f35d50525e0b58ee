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

#ifndef CVCOMB_ERROR_H
#define CVCOMB_ERROR_H

#include <stdexcept>
#include <string>

namespace cvcomb {

/// Broad failure class; the CLI maps each to a fixed exit status.
enum class ErrorKind {
    kConfig,     // a precondition on caller-supplied parameters
    kValidation, // input data fails a structural check
    kInvariant,  // an internal construction produced something it must not
};

/// All library failures. `cause()` is a short machine-readable token such as
/// "odd_M" or "not_hankel"; `what()` carries the human-readable detail.
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, std::string cause, const std::string &message);

    ErrorKind kind() const noexcept {
        return kind_;
    }
    const std::string &cause() const noexcept {
        return cause_;
    }

   private:
    ErrorKind kind_;
    std::string cause_;
};

[[noreturn]] void throw_config(const std::string &cause, const std::string &message);
[[noreturn]] void throw_validation(const std::string &cause, const std::string &message);
[[noreturn]] void throw_invariant(const std::string &cause, const std::string &message);

/// Process exit status for an error kind: 2 config, 3 validation, 4 invariant.
int exit_code_for(ErrorKind kind);

}  // namespace cvcomb

#endif
