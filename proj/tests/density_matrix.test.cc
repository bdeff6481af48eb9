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

#include "bellclone/density_matrix.h"

#include <numeric>
#include <random>

#include "bellclone/cloner.h"
#include "bellclone/errors.h"
#include "bellclone/random_circuits.h"
#include "gtest/gtest.h"
#include "test_util.h"

using namespace bellclone;
using namespace bellclone::testing;

namespace {

double deviation(const DenseMatrix &a, const DenseMatrix &b) {
    return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace

TEST(density_matrix, validates_invariants) {
    DenseMatrix non_hermitian(2, 2);
    non_hermitian << 0.5, 0.1, 0.2, 0.5;
    EXPECT_THROW(DensityMatrix(1, non_hermitian), ContractViolation);

    DenseMatrix bad_trace(2, 2);
    bad_trace << 0.6, 0, 0, 0.6;
    EXPECT_THROW(DensityMatrix(1, bad_trace), ContractViolation);

    DenseMatrix negative(2, 2);
    negative << 1.5, 0, 0, -0.5;
    EXPECT_THROW(DensityMatrix(1, negative), ContractViolation);

    EXPECT_THROW(DensityMatrix(2, DenseMatrix::Identity(2, 2) / 2.0), ContractViolation);
    EXPECT_NO_THROW(DensityMatrix(1, DenseMatrix::Identity(2, 2) / 2.0));
}

TEST(partial_trace, product_basis_state) {
    DensityMatrix rho = partial_trace(StateVector::from_bits("00"), {0});
    DenseMatrix want(2, 2);
    want << 1, 0, 0, 0;
    EXPECT_LT(deviation(rho.entries(), want), kExactTolerance);
}

TEST(partial_trace, bell_pair_is_maximally_mixed) {
    StateVector b0 = bell_state(BellIndex(0));
    DenseMatrix frozen = DenseMatrix::Identity(2, 2) * 0.5;
    EXPECT_LT(deviation(oracle_partial_trace(b0, {0}), frozen), kExactTolerance);
    EXPECT_LT(deviation(partial_trace(b0, {0}).entries(), frozen), kExactTolerance);
    EXPECT_NEAR(partial_trace(b0, {1}).purity(), 0.5, kExactTolerance);
}

TEST(partial_trace, clone_of_b2_keeps_pure_pair) {
    StateVector joint = apply_circuit(tensor(bell_state(BellIndex(2)), StateVector::from_bits("00")), clone_circuit());
    DenseMatrix want = DensityMatrix::pure(bell_state(BellIndex(2))).entries();
    EXPECT_LT(deviation(partial_trace(joint, {0, 1}).entries(), want), kExactTolerance);
    EXPECT_LT(deviation(partial_trace(joint, {2, 3}).entries(), want), kExactTolerance);
}

TEST(partial_trace, keep_order_is_respected) {
    // |01> keeping [1, 0] reads as |10>.
    DensityMatrix rho = partial_trace(StateVector::from_bits("01"), {1, 0});
    EXPECT_NEAR(rho(2, 2).real(), 1.0, kExactTolerance);
}

TEST(partial_trace, matches_oracle_on_random_states) {
    std::mt19937_64 rng(17);
    const std::vector<std::vector<size_t>> keeps = {{0}, {3}, {1, 2}, {2, 0}, {0, 1, 3}, {3, 2, 1, 0}};
    for (int t = 0; t < 20; t++) {
        StateVector s = random_state(4, rng);
        for (const auto &keep : keeps) {
            EXPECT_LT(deviation(partial_trace(s, keep).entries(), oracle_partial_trace(s, keep)), kComposedTolerance);
        }
    }
}

TEST(partial_trace, product_state_returns_pure_factor) {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 50; t++) {
        StateVector a = random_state(1 + t % 3, rng);
        StateVector b = random_state(1 + (t / 3) % 3, rng);
        std::vector<size_t> keep(a.num_qubits());
        std::iota(keep.begin(), keep.end(), 0);
        EXPECT_LT(deviation(partial_trace(tensor(a, b), keep).entries(), DensityMatrix::pure(a).entries()),
                  kExactTolerance);
    }
}

TEST(partial_trace, contract_violations) {
    StateVector s = StateVector::from_bits("000");
    EXPECT_THROW(partial_trace(s, {0, 0}), ContractViolation);
    EXPECT_THROW(partial_trace(s, {3}), ContractViolation);
    EXPECT_THROW(partial_trace(s, std::vector<size_t>{}), ContractViolation);
}

TEST(fidelity_mixed, examples) {
    StateVector b0 = bell_state(BellIndex(0));
    StateVector b1 = bell_state(BellIndex(1));
    EXPECT_NEAR(fidelity_mixed(DensityMatrix::pure(b0), b0), 1.0, kExactTolerance);
    EXPECT_NEAR(fidelity_mixed(DensityMatrix(1, DenseMatrix::Identity(2, 2) / 2.0), StateVector::basis(1, 0)), 0.5,
                kExactTolerance);

    DenseMatrix mixed = (DensityMatrix::pure(b0).entries() + DensityMatrix::pure(b1).entries()) / 2.0;
    EXPECT_NEAR(fidelity_mixed(DensityMatrix(2, mixed), bell_mix(0, 1, std::numbers::pi / 4)), 0.5, kExactTolerance);

    EXPECT_THROW(fidelity_mixed(DensityMatrix::pure(b0), StateVector::basis(1, 0)), ContractViolation);
}

TEST(fidelity_mixed, agrees_with_pure_fidelity_on_projectors) {
    std::mt19937_64 rng(29);
    for (int t = 0; t < 100; t++) {
        size_t n = 1 + t % 4;
        StateVector psi = random_state(n, rng);
        StateVector phi = random_state(n, rng);
        EXPECT_NEAR(fidelity_mixed(DensityMatrix::pure(psi), phi), fidelity_pure(psi, phi), kExactTolerance);
    }
}
