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

#ifndef BELLCLONE_CIRCUIT_H
#define BELLCLONE_CIRCUIT_H

#include <array>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "bellclone/state_vector.h"

namespace bellclone {

// Qubit indices are 0-based positions in left-to-right ket order.

struct Hadamard {
    size_t target;
    bool operator==(const Hadamard &) const = default;
};

struct PauliX {
    size_t target;
    bool operator==(const PauliX &) const = default;
};

struct PauliZ {
    size_t target;
    bool operator==(const PauliZ &) const = default;
};

struct Cnot {
    size_t control;
    size_t target;
    bool operator==(const Cnot &) const = default;
};

/// Arbitrary single-qubit unitary, row-major: {m00, m01, m10, m11}.
struct SingleQubit {
    size_t target;
    std::array<Amplitude, 4> matrix;
    bool operator==(const SingleQubit &) const = default;
};

using Gate = std::variant<Hadamard, PauliX, PauliZ, Cnot, SingleQubit>;

/// Qubits touched by the gate, control first for CNOT.
std::vector<size_t> gate_qubits(const Gate &gate);

/// Human-readable form, e.g. "H 0" or "CNOT 0 2".
std::string describe(const Gate &gate);

/// Throws ContractViolation unless the gate is well formed on `num_qubits`
/// qubits (indices in range, CNOT control != target, unitary 2x2 matrix).
void validate_gate(const Gate &gate, size_t num_qubits);

/// An ordered gate list over a fixed number of qubits.
class Circuit {
   public:
    explicit Circuit(size_t num_qubits);
    Circuit(size_t num_qubits, std::initializer_list<Gate> ops);

    size_t num_qubits() const {
        return num_qubits_;
    }
    std::span<const Gate> ops() const {
        return ops_;
    }
    size_t size() const {
        return ops_.size();
    }
    bool empty() const {
        return ops_.empty();
    }

    Circuit &append(const Gate &gate);

    /// Appends every gate of `sub`, relabelling sub-qubit j as `qubit_map[j]`.
    Circuit &append(const Circuit &sub, std::span<const size_t> qubit_map);
    Circuit &append(const Circuit &sub, std::initializer_list<size_t> qubit_map);

    std::string str() const;

    bool operator==(const Circuit &) const = default;

   private:
    size_t num_qubits_;
    std::vector<Gate> ops_;
};

/// Applies `gate` directly to a raw amplitude buffer of `num_qubits` qubits.
/// Linear; does not renormalize.
void apply_gate_in_place(std::span<Amplitude> amps, size_t num_qubits, const Gate &gate);

/// Returns the state after `gate`; the input is left untouched.
StateVector apply_gate(const StateVector &state, const Gate &gate);

/// Applies the circuit's gates in listed order.
StateVector apply_circuit(const StateVector &state, const Circuit &circuit);

}  // namespace bellclone

#endif
