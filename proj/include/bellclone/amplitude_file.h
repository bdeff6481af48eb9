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

#ifndef BELLCLONE_AMPLITUDE_FILE_H
#define BELLCLONE_AMPLITUDE_FILE_H

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bellclone/state_vector.h"

namespace bellclone {

// Text format:
//
//   # comment lines start with '#'
//   qubits N
//   re im        <- exactly 2^N of these, basis-index order
//
// Tokens are whitespace separated. Blank lines are skipped.

/// Malformed file contents. `line()` is 1-based; 0 means end of input.
class AmplitudeParseError : public std::runtime_error {
   public:
    AmplitudeParseError(size_t line, const std::string &what);
    size_t line() const {
        return line_;
    }

   private:
    size_t line_;
};

/// Well-formed file whose amplitudes fail a semantic check (qubit count, norm).
class AmplitudeValidationError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

inline constexpr size_t kMaxFileQubits = 16;

struct AmplitudeTable {
    size_t num_qubits;
    std::vector<Amplitude> amps;
};

/// Parses the format above without normalizing.
AmplitudeTable read_amplitudes(std::istream &in);

/// Checks the qubit count (when `expected_qubits` is nonzero) and that the
/// norm is within `norm_slack` of 1, then renormalizes.
StateVector to_state(const AmplitudeTable &table, size_t expected_qubits, double norm_slack);

/// Writes `state` in the same format with 17 significant digits.
void write_amplitudes(std::ostream &out, const StateVector &state);

}  // namespace bellclone

#endif
