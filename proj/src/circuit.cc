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

#include "bellclone/circuit.h"

#include <cmath>
#include <numbers>
#include <sstream>

#include "bellclone/errors.h"

namespace bellclone {

namespace {

template <class... Fs>
struct overloaded : Fs... {
    using Fs::operator()...;
};

void check_index(size_t q, size_t num_qubits) {
    if (q >= num_qubits) {
        throw ContractViolation("qubit index " + std::to_string(q) + " out of range for " +
                                std::to_string(num_qubits) + " qubits");
    }
}

Gate remap(const Gate &gate, std::span<const size_t> m) {
    return std::visit(
        overloaded{
            [&](const Hadamard &g) -> Gate { return Hadamard{m[g.target]}; },
            [&](const PauliX &g) -> Gate { return PauliX{m[g.target]}; },
            [&](const PauliZ &g) -> Gate { return PauliZ{m[g.target]}; },
            [&](const Cnot &g) -> Gate { return Cnot{m[g.control], m[g.target]}; },
            [&](const SingleQubit &g) -> Gate { return SingleQubit{m[g.target], g.matrix}; },
        },
        gate);
}

// Applies a 2x2 matrix to every (|..0..>, |..1..>) amplitude pair of qubit `target`.
void apply_single(std::span<Amplitude> amps, size_t num_qubits, size_t target, Amplitude m00,
                  Amplitude m01, Amplitude m10, Amplitude m11) {
    const size_t stride = size_t{1} << bit_of_qubit(num_qubits, target);
    const size_t dim = amps.size();
    for (size_t base = 0; base < dim; base += 2 * stride) {
        for (size_t k = base; k < base + stride; k++) {
            Amplitude a0 = amps[k];
            Amplitude a1 = amps[k + stride];
            amps[k] = m00 * a0 + m01 * a1;
            amps[k + stride] = m10 * a0 + m11 * a1;
        }
    }
}

}  // namespace

std::vector<size_t> gate_qubits(const Gate &gate) {
    return std::visit(overloaded{
                          [](const Cnot &g) { return std::vector<size_t>{g.control, g.target}; },
                          [](const auto &g) { return std::vector<size_t>{g.target}; },
                      },
                      gate);
}

std::string describe(const Gate &gate) {
    std::ostringstream out;
    std::visit(overloaded{
                   [&](const Hadamard &g) { out << "H " << g.target; },
                   [&](const PauliX &g) { out << "X " << g.target; },
                   [&](const PauliZ &g) { out << "Z " << g.target; },
                   [&](const Cnot &g) { out << "CNOT " << g.control << " " << g.target; },
                   [&](const SingleQubit &g) {
                       out << "U " << g.target << " [";
                       for (size_t k = 0; k < 4; k++) {
                           out << (k ? " " : "") << g.matrix[k].real() << "," << g.matrix[k].imag();
                       }
                       out << "]";
                   },
               },
               gate);
    return out.str();
}

void validate_gate(const Gate &gate, size_t num_qubits) {
    for (size_t q : gate_qubits(gate)) {
        check_index(q, num_qubits);
    }
    if (const auto *g = std::get_if<Cnot>(&gate); g && g->control == g->target) {
        throw ContractViolation("CNOT control and target must differ (both " + std::to_string(g->target) + ")");
    }
    if (const auto *g = std::get_if<SingleQubit>(&gate)) {
        const auto &m = g->matrix;
        for (const auto &x : m) {
            if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) {
                throw ContractViolation("single-qubit matrix has a non-finite entry");
            }
        }
        // Columns of a unitary are orthonormal.
        Amplitude c00 = std::conj(m[0]) * m[0] + std::conj(m[2]) * m[2];
        Amplitude c11 = std::conj(m[1]) * m[1] + std::conj(m[3]) * m[3];
        Amplitude c01 = std::conj(m[0]) * m[1] + std::conj(m[2]) * m[3];
        if (std::abs(c00 - 1.0) > kExactTolerance || std::abs(c11 - 1.0) > kExactTolerance ||
            std::abs(c01) > kExactTolerance) {
            throw ContractViolation("single-qubit matrix is not unitary");
        }
    }
}

Circuit::Circuit(size_t num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits == 0) {
        throw ContractViolation("a circuit needs at least one qubit");
    }
}

Circuit::Circuit(size_t num_qubits, std::initializer_list<Gate> ops) : Circuit(num_qubits) {
    for (const auto &g : ops) {
        append(g);
    }
}

Circuit &Circuit::append(const Gate &gate) {
    validate_gate(gate, num_qubits_);
    ops_.push_back(gate);
    return *this;
}

Circuit &Circuit::append(const Circuit &sub, std::span<const size_t> qubit_map) {
    if (qubit_map.size() != sub.num_qubits()) {
        throw ContractViolation("qubit map has " + std::to_string(qubit_map.size()) + " entries for a " +
                                std::to_string(sub.num_qubits()) + "-qubit circuit");
    }
    for (size_t i = 0; i < qubit_map.size(); i++) {
        check_index(qubit_map[i], num_qubits_);
        for (size_t j = 0; j < i; j++) {
            if (qubit_map[i] == qubit_map[j]) {
                throw ContractViolation("qubit map repeats qubit " + std::to_string(qubit_map[i]));
            }
        }
    }
    for (const auto &g : sub.ops()) {
        append(remap(g, qubit_map));
    }
    return *this;
}

Circuit &Circuit::append(const Circuit &sub, std::initializer_list<size_t> qubit_map) {
    return append(sub, std::span<const size_t>(qubit_map.begin(), qubit_map.size()));
}

std::string Circuit::str() const {
    std::ostringstream out;
    out << "qubits " << num_qubits_ << "\n";
    for (const auto &g : ops_) {
        out << describe(g) << "\n";
    }
    return out.str();
}

void apply_gate_in_place(std::span<Amplitude> amps, size_t num_qubits, const Gate &gate) {
    if (amps.size() != (size_t{1} << num_qubits)) {
        throw ContractViolation("amplitude buffer does not match qubit count");
    }
    validate_gate(gate, num_qubits);
    constexpr double r = std::numbers::sqrt2 / 2;
    std::visit(overloaded{
                   [&](const Hadamard &g) { apply_single(amps, num_qubits, g.target, r, r, r, -r); },
                   [&](const PauliX &g) {
                       const size_t stride = size_t{1} << bit_of_qubit(num_qubits, g.target);
                       for (size_t k = 0; k < amps.size(); k++) {
                           if (!(k & stride)) {
                               std::swap(amps[k], amps[k | stride]);
                           }
                       }
                   },
                   [&](const PauliZ &g) {
                       const size_t stride = size_t{1} << bit_of_qubit(num_qubits, g.target);
                       for (size_t k = 0; k < amps.size(); k++) {
                           if (k & stride) {
                               amps[k] = -amps[k];
                           }
                       }
                   },
                   [&](const Cnot &g) {
                       const size_t c = size_t{1} << bit_of_qubit(num_qubits, g.control);
                       const size_t t = size_t{1} << bit_of_qubit(num_qubits, g.target);
                       for (size_t k = 0; k < amps.size(); k++) {
                           if ((k & c) && !(k & t)) {
                               std::swap(amps[k], amps[k | t]);
                           }
                       }
                   },
                   [&](const SingleQubit &g) {
                       const auto &m = g.matrix;
                       apply_single(amps, num_qubits, g.target, m[0], m[1], m[2], m[3]);
                   },
               },
               gate);
}

StateVector apply_gate(const StateVector &state, const Gate &gate) {
    std::vector<Amplitude> amps(state.amplitudes().begin(), state.amplitudes().end());
    apply_gate_in_place(amps, state.num_qubits(), gate);
    return StateVector(state.num_qubits(), std::move(amps));
}

StateVector apply_circuit(const StateVector &state, const Circuit &circuit) {
    if (circuit.num_qubits() != state.num_qubits()) {
        throw ContractViolation("circuit acts on " + std::to_string(circuit.num_qubits()) + " qubits but state has " +
                                std::to_string(state.num_qubits()));
    }
    std::vector<Amplitude> amps(state.amplitudes().begin(), state.amplitudes().end());
    for (const auto &g : circuit.ops()) {
        apply_gate_in_place(amps, state.num_qubits(), g);
    }
    return StateVector(state.num_qubits(), std::move(amps));
}

}  // namespace bellclone
