// Copyright 2026 The bellclone Authors
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

#ifndef BELLCLONE_ERRORS_H
#define BELLCLONE_ERRORS_H

#include <stdexcept>
#include <string>

namespace bellclone {

/// Raised when a caller breaks an operation's precondition (bad qubit index,
/// dimension mismatch, non-normalized amplitudes, ...).
class ContractViolation : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a request is well-formed but exceeds a size guard.
class SizeLimitExceeded : public std::length_error {
   public:
    using std::length_error::length_error;
};

}  // namespace bellclone

#endif
