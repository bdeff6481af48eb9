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

#ifndef BELLCLONE_CLONER_H
#define BELLCLONE_CLONER_H

#include <cstdint>
#include <optional>
#include <string>

#include "bellclone/bell.h"
#include "bellclone/circuit.h"
#include "bellclone/state_vector.h"

namespace bellclone {

/// Optimal fidelity of a universal (state-independent) 1 -> 2 qubit cloner.
/// Literature value, kept only for comparison.
inline constexpr double kUniversalClonerFidelity = 5.0 / 6.0;

// Register layout used by every circuit in this header:
//   qubits 0,1: the Bell pair under test
//   qubits 2,3: ancillas, prepared in |00>

/// Four-qubit transform with U(b_i (x) |00>) = b_i (x) |bin(i)>.
///
/// Realized as decode-copy-encode: the pair is rotated to its originating
/// computational state, each bit is copied onto an ancilla with a CNOT, and
/// the pair is re-encoded. Only the action on the Bell (x) |00> subspace is
/// fixed by the identification protocol; off that subspace this is just one
/// valid completion.
Circuit tgp_circuit();

/// tgp_circuit followed by bell_encode on the ancillas.
/// V(b_i (x) |00>) = b_i (x) b_i.
Circuit clone_circuit();

struct IdentificationResult {
    BellIndex index;
    /// Measured ancilla bits; always index.bits().
    std::string outcome_bits;
    double probability;
    /// State of qubits 0,1 after the ancilla measurement.
    StateVector residual_state;
};

/// Runs the pair through tgp_circuit with fresh |00> ancillas, then measures
/// the ancillas. For a Bell-basis input the result is certain and the pair is
/// undisturbed.
IdentificationResult identify(const StateVector &pair, uint64_t random_seed);
/// Same, with a caller-supplied 4-qubit transform in place of tgp_circuit.
IdentificationResult identify(const StateVector &pair, uint64_t random_seed, const Circuit &transform);

struct CloneReport {
    /// Set when the input is a Bell-basis state (up to phase); otherwise the
    /// input is reported as a superposition.
    std::optional<BellIndex> input_index;
    StateVector joint_state;
    /// Fidelity of the reduced state of qubits 0,1 with the input.
    double fidelity_original;
    /// Fidelity of the reduced state of qubits 2,3 with the input.
    double fidelity_clone;
    double ucm_reference = kUniversalClonerFidelity;

    /// "0".."3" or "superposition".
    std::string input_label() const;
};

CloneReport clone(const StateVector &pair);
/// Same, with a caller-supplied 4-qubit cloner in place of clone_circuit.
CloneReport clone(const StateVector &pair, const Circuit &cloner);

/// Builds `input (x) |00>` after checking the input is a 2-qubit state.
StateVector with_fresh_ancillas(const StateVector &pair);

}  // namespace bellclone

#endif
