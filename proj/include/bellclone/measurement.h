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

#ifndef BELLCLONE_MEASUREMENT_H
#define BELLCLONE_MEASUREMENT_H

#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "bellclone/state_vector.h"

namespace bellclone {

/// Outcome of a projective computational-basis measurement.
struct MeasurementRecord {
    std::vector<size_t> measured_qubits;
    /// One '0'/'1' per measured qubit, in `measured_qubits` order.
    std::string outcome;
    /// Born probability of `outcome`.
    double probability;
    /// Projected and renormalized state of the whole register.
    StateVector post_state;
};

/// Exact Born distribution over outcomes of `qubits`. Outcomes with zero
/// probability are omitted.
std::map<std::string, double> measurement_distribution(const StateVector &state, std::span<const size_t> qubits);
std::map<std::string, double> measurement_distribution(const StateVector &state, std::initializer_list<size_t> qubits);

/// Samples one outcome by the Born rule. Deterministic for a given seed.
MeasurementRecord measure(const StateVector &state, std::span<const size_t> qubits, uint64_t random_seed);
MeasurementRecord measure(const StateVector &state, std::initializer_list<size_t> qubits, uint64_t random_seed);

/// Projects onto `outcome` of `qubits` and returns the renormalized state of
/// the remaining qubits (in their original relative order). Throws if the
/// outcome has zero probability or every qubit is measured.
StateVector remaining_state(const StateVector &state, std::span<const size_t> qubits, std::string_view outcome);

/// Uniform double in [0, 1) from the top 53 bits of a 64-bit draw. Portable
/// across standard libraries, unlike std::uniform_real_distribution.
double unit_interval(uint64_t bits);

}  // namespace bellclone

#endif
