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

#include "cvcomb/error.h"

namespace cvcomb {

Error::Error(ErrorKind kind, std::string cause, const std::string &message)
    : std::runtime_error(message), kind_(kind), cause_(std::move(cause)) {
}

void throw_config(const std::string &cause, const std::string &message) {
    throw Error(ErrorKind::kConfig, cause, message);
}

void throw_validation(const std::string &cause, const std::string &message) {
    throw Error(ErrorKind::kValidation, cause, message);
}

void throw_invariant(const std::string &cause, const std::string &message) {
    throw Error(ErrorKind::kInvariant, cause, message);
}

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::kConfig:
            return 2;
        case ErrorKind::kValidation:
            return 3;
        case ErrorKind::kInvariant:
            return 4;
    }
    return 4;
}

}  // namespace cvcomb
