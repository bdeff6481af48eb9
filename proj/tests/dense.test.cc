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

#include "bellclone/dense.h"

#include <random>

#include "bellclone/bell.h"
#include "bellclone/cloner.h"
#include "bellclone/errors.h"
#include "bellclone/random_circuits.h"
#include "gtest/gtest.h"
#include "test_util.h"

using namespace bellclone;
using namespace bellclone::testing;

TEST(circuit_unitary, empty_circuit_is_identity) {
    EXPECT_EQ(circuit_unitary(Circuit(2)), DenseMatrix::Identity(4, 4));
}

TEST(circuit_unitary, encode_columns_are_bell_states) {
    DenseMatrix u = circuit_unitary(bell_encode_circuit());
    for (auto i : BellIndex::all()) {
        EXPECT_LT(column_state(u, static_cast<size_t>(i.value())).max_abs_diff(bell_state(i)), kExactTolerance);
    }
}

TEST(circuit_unitary, tgp_subspace_action) {
    DenseMatrix u = circuit_unitary(tgp_circuit());
    ASSERT_EQ(u.rows(), 16);
    for (auto i : BellIndex::all()) {
        StateVector in = tensor(bell_state(i), StateVector::from_bits("00"));
        StateVector want = tensor(bell_state(i), StateVector::from_bits(i.bits()));
        EXPECT_LT(max_abs_diff(u * to_eigen(in), want), kExactTolerance);
    }
}

TEST(circuit_unitary, cnot_matrix_is_permutation) {
    // Hand-written CNOT(0 -> 1) in the |q0 q1> basis.
    DenseMatrix want(4, 4);
    want << 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0;
    EXPECT_EQ(gate_unitary(Cnot{0, 1}, 2), want);
    DenseMatrix flipped(4, 4);
    flipped << 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0;
    EXPECT_EQ(gate_unitary(Cnot{1, 0}, 2), flipped);
}

TEST(circuit_unitary, size_guard) {
    EXPECT_THROW(circuit_unitary(Circuit(13)), SizeLimitExceeded);
    EXPECT_NO_THROW(circuit_unitary(Circuit(kMaxDenseQubits - 4)));
}

TEST(circuit_unitary, random_circuits_are_unitary) {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 100; t++) {
        Circuit c = random_circuit(1 + t % 4, 12, rng);
        EXPECT_LT(unitarity_deviation(circuit_unitary(c)), kComposedTolerance);
    }
}
