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

#include <random>

#include "bellclone/errors.h"
#include "bellclone/random_circuits.h"
#include "gtest/gtest.h"
#include "test_util.h"

using namespace bellclone;
using namespace bellclone::testing;

TEST(apply_gate, hadamard_then_cnot_builds_b0) {
    StateVector h = apply_gate(StateVector::from_bits("00"), Hadamard{0});
    EXPECT_LT(h.max_abs_diff(make_state({1, 0, 1, 0})), kExactTolerance);  // (|00> + |10>)/sqrt2

    StateVector c = apply_gate(h, Cnot{0, 1});
    EXPECT_LT(c.max_abs_diff(make_state({1, 0, 0, 1})), kExactTolerance);  // (|00> + |11>)/sqrt2
}

TEST(apply_gate, hadamard_on_one_gives_minus) {
    StateVector h = apply_gate(StateVector::from_bits("10"), Hadamard{0});
    EXPECT_LT(h.max_abs_diff(make_state({1, 0, -1, 0})), kExactTolerance);  // (|00> - |10>)/sqrt2
}

TEST(apply_gate, identity_single_qubit_is_noop) {
    std::mt19937_64 rng(1);
    StateVector s = random_state(3, rng);
    for (size_t q = 0; q < 3; q++) {
        EXPECT_EQ(apply_gate(s, SingleQubit{q, {1, 0, 0, 1}}), s);
    }
}

TEST(apply_gate, paulis_and_cnot_on_basis_states) {
    EXPECT_EQ(apply_gate(StateVector::from_bits("000"), PauliX{1}), StateVector::from_bits("010"));
    EXPECT_EQ(apply_gate(StateVector::from_bits("110"), Cnot{0, 2}), StateVector::from_bits("111"));
    EXPECT_EQ(apply_gate(StateVector::from_bits("010"), Cnot{0, 2}), StateVector::from_bits("010"));
    EXPECT_EQ(apply_gate(StateVector::from_bits("011"), Cnot{2, 0}), StateVector::from_bits("111"));
    StateVector z = apply_gate(StateVector::from_bits("01"), PauliZ{1});
    EXPECT_EQ(z[1], Amplitude(-1));
}

TEST(apply_gate, leaves_input_untouched) {
    StateVector s = StateVector::from_bits("00");
    StateVector copy = s;
    (void)apply_gate(s, Hadamard{0});
    EXPECT_EQ(s, copy);
}

TEST(apply_gate, contract_violations) {
    StateVector s = StateVector::from_bits("00");
    EXPECT_THROW(apply_gate(s, Hadamard{2}), ContractViolation);
    EXPECT_THROW(apply_gate(s, Cnot{1, 1}), ContractViolation);
    EXPECT_THROW(apply_gate(s, Cnot{0, 5}), ContractViolation);
    EXPECT_THROW(apply_gate(s, SingleQubit{0, {1, 1, 0, 1}}), ContractViolation);
}

TEST(circuit, rejects_invalid_gates_on_append) {
    Circuit c(2);
    EXPECT_THROW(c.append(PauliX{2}), ContractViolation);
    EXPECT_THROW(c.append(Cnot{0, 0}), ContractViolation);
    EXPECT_TRUE(c.empty());
    EXPECT_THROW(Circuit(0), ContractViolation);
}

TEST(circuit, append_remaps_subcircuit) {
    Circuit sub(2, {Hadamard{0}, Cnot{0, 1}});
    Circuit c(4);
    c.append(sub, {2, 3});
    ASSERT_EQ(c.size(), 2u);
    EXPECT_EQ(c.ops()[0], Gate(Hadamard{2}));
    EXPECT_EQ(c.ops()[1], Gate(Cnot{2, 3}));
    EXPECT_THROW(c.append(sub, {1, 1}), ContractViolation);
    EXPECT_THROW(c.append(sub, {0}), ContractViolation);
    EXPECT_EQ(c.str(), "qubits 4\nH 2\nCNOT 2 3\n");
}

TEST(apply_circuit, empty_circuit_is_identity) {
    StateVector b0 = bell_state(BellIndex(0));
    EXPECT_EQ(apply_circuit(b0, Circuit(2)), b0);
}

TEST(apply_circuit, encodes_01_to_b1) {
    StateVector out = apply_circuit(StateVector::from_bits("01"), Circuit(2, {Hadamard{0}, Cnot{0, 1}}));
    EXPECT_LT(out.max_abs_diff(bell_state(BellIndex(1))), kExactTolerance);
}

TEST(apply_circuit, qubit_count_mismatch) {
    EXPECT_THROW(apply_circuit(StateVector::from_bits("00"), Circuit(3)), ContractViolation);
}

TEST(apply_circuit, matches_dense_oracle_on_random_circuits) {
    std::mt19937_64 rng(42);
    for (int t = 0; t < 50; t++) {
        Circuit c = random_circuit(4, 12, rng);
        StateVector s = random_state(4, rng);
        EXPECT_LT(max_abs_diff(oracle_apply(c, s), apply_circuit(s, c)), kComposedTolerance) << c.str();
    }
}

TEST(apply_circuit, norm_preserved) {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 100; t++) {
        size_t n = 1 + t % 5;
        StateVector s = random_state(n, rng);
        Circuit c = random_circuit(n, 12, rng);
        std::vector<Amplitude> amps(s.amplitudes().begin(), s.amplitudes().end());
        for (const auto &g : c.ops()) {
            apply_gate_in_place(amps, n, g);
            EXPECT_NEAR(norm_of(amps), 1.0, kExactTolerance);
        }
    }
}

TEST(apply_circuit, linear) {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 50; t++) {
        StateVector u = random_state(3, rng);
        StateVector v = random_state(3, rng);
        Circuit c = random_circuit(3, 10, rng);
        const Amplitude alpha = std::polar(0.6, 0.3 * t);
        const Amplitude beta = std::polar(0.8, -0.7 * t);

        // The kernel is linear on raw buffers; no normalization involved.
        std::vector<Amplitude> mix(8);
        for (size_t k = 0; k < 8; k++) {
            mix[k] = alpha * u[k] + beta * v[k];
        }
        for (const auto &g : c.ops()) {
            apply_gate_in_place(mix, 3, g);
        }
        StateVector cu = apply_circuit(u, c);
        StateVector cv = apply_circuit(v, c);
        for (size_t k = 0; k < 8; k++) {
            EXPECT_LT(std::abs(mix[k] - (alpha * cu[k] + beta * cv[k])), kComposedTolerance);
        }
    }
}
