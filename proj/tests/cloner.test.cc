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

#include "bellclone/cloner.h"

#include <numbers>

#include "bellclone/dense.h"
#include "bellclone/density_matrix.h"
#include "bellclone/errors.h"
#include "gtest/gtest.h"
#include "test_util.h"

using namespace bellclone;
using namespace bellclone::testing;

namespace {

StateVector with_ancillas(const StateVector &pair, std::string_view bits = "00") {
    return tensor(pair, StateVector::from_bits(bits));
}

// Reduced fidelities computed purely from the dense unitary and the
// full-density-matrix partial trace.
std::pair<double, double> oracle_clone_fidelities(const StateVector &pair) {
    Eigen::VectorXcd joint = oracle_apply(clone_circuit(), with_ancillas(pair));
    std::vector<Amplitude> amps(joint.data(), joint.data() + joint.size());
    StateVector j(4, amps);
    Eigen::VectorXcd v = to_eigen(pair);
    double f0 = v.dot(oracle_partial_trace(j, {0, 1}) * v).real();
    double f1 = v.dot(oracle_partial_trace(j, {2, 3}) * v).real();
    return {f0, f1};
}

}  // namespace

TEST(tgp_circuit, structure) {
    Circuit want(4, {Cnot{0, 1}, Hadamard{0}, Cnot{0, 2}, Cnot{1, 3}, Hadamard{0}, Cnot{0, 1}});
    EXPECT_EQ(tgp_circuit(), want);
}

TEST(tgp_circuit, action_on_bell_inputs) {
    for (auto i : BellIndex::all()) {
        StateVector out = apply_circuit(with_ancillas(bell_state(i)), tgp_circuit());
        EXPECT_LT(out.max_abs_diff(with_ancillas(bell_state(i), i.bits())), kExactTolerance) << i.bits();
    }
}

TEST(tgp_circuit, superposition_by_linearity) {
    StateVector in = with_ancillas(bell_mix(0, 2, std::numbers::pi / 4));
    StateVector out = apply_circuit(in, tgp_circuit());
    EXPECT_LT(max_abs_diff(oracle_apply(tgp_circuit(), in), out), kComposedTolerance);

    std::vector<Amplitude> want(16);
    StateVector a = with_ancillas(bell_state(BellIndex(0)), "00");
    StateVector b = with_ancillas(bell_state(BellIndex(2)), "10");
    for (size_t k = 0; k < 16; k++) {
        want[k] = kInvSqrt2 * (a[k] + b[k]);
    }
    EXPECT_LT(out.max_abs_diff(StateVector(4, want)), kExactTolerance);
}

TEST(tgp_circuit, swapped_encode_decode_breaks_subspace_action) {
    Circuit swapped(4);
    swapped.append(bell_encode_circuit(), {0, 1});
    swapped.append(Cnot{0, 2});
    swapped.append(Cnot{1, 3});
    swapped.append(bell_decode_circuit(), {0, 1});
    double worst = 0;
    for (auto i : BellIndex::all()) {
        StateVector out = apply_circuit(with_ancillas(bell_state(i)), swapped);
        worst = std::max(worst, out.max_abs_diff(with_ancillas(bell_state(i), i.bits())));
    }
    EXPECT_GT(worst, 0.1);
}

TEST(identify, bell_inputs_are_certain_and_undisturbed) {
    for (auto i : BellIndex::all()) {
        for (uint64_t seed = 0; seed < 100; seed++) {
            IdentificationResult r = identify(bell_state(i), seed);
            EXPECT_EQ(r.index, i);
            EXPECT_EQ(r.outcome_bits, i.bits());
            EXPECT_NEAR(r.probability, 1.0, kExactTolerance);
            EXPECT_NEAR(fidelity_pure(r.residual_state, bell_state(i)), 1.0, kExactTolerance);
            EXPECT_LT(r.residual_state.max_abs_diff(bell_state(i)), kExactTolerance);
        }
    }
}

TEST(identify, superposition_collapses) {
    StateVector pair = bell_mix(0, 1, std::numbers::pi / 4);
    bool saw[2] = {false, false};
    for (uint64_t seed = 0; seed < 64; seed++) {
        IdentificationResult r = identify(pair, seed);
        ASSERT_TRUE(r.index == BellIndex(0) || r.index == BellIndex(1));
        EXPECT_NEAR(r.probability, 0.5, kExactTolerance);
        EXPECT_NEAR(fidelity_pure(r.residual_state, bell_state(r.index)), 1.0, kExactTolerance);
        saw[r.index.value()] = true;
    }
    EXPECT_TRUE(saw[0] && saw[1]);
}

TEST(identify, rejects_wrong_width) {
    EXPECT_THROW(identify(StateVector::from_bits("0"), 0), ContractViolation);
}

TEST(clone_circuit, clones_bell_inputs) {
    EXPECT_EQ(clone_circuit().size(), tgp_circuit().size() + 2);
    for (auto i : BellIndex::all()) {
        StateVector b = bell_state(i);
        StateVector out = apply_circuit(with_ancillas(b), clone_circuit());
        EXPECT_LT(out.max_abs_diff(tensor(b, b)), kExactTolerance) << i.bits();
    }
}

TEST(clone_circuit, superposition_by_linearity) {
    StateVector in = with_ancillas(bell_mix(0, 1, std::numbers::pi / 4));
    StateVector out = apply_circuit(in, clone_circuit());
    StateVector b0 = bell_state(BellIndex(0));
    StateVector b1 = bell_state(BellIndex(1));
    StateVector b00 = tensor(b0, b0);
    StateVector b11 = tensor(b1, b1);
    std::vector<Amplitude> want(16);
    for (size_t k = 0; k < 16; k++) {
        want[k] = kInvSqrt2 * (b00[k] + b11[k]);
    }
    EXPECT_LT(out.max_abs_diff(StateVector(4, want)), kExactTolerance);
    EXPECT_LT(max_abs_diff(oracle_apply(clone_circuit(), in), out), kComposedTolerance);
}

TEST(clone_circuit, unitary) {
    EXPECT_LT(unitarity_deviation(circuit_unitary(tgp_circuit())), kComposedTolerance);
    EXPECT_LT(unitarity_deviation(circuit_unitary(clone_circuit())), kComposedTolerance);
}

TEST(clone, bell_input_has_unit_fidelity) {
    CloneReport r = clone(bell_state(BellIndex(2)));
    EXPECT_EQ(r.input_index, BellIndex(2));
    EXPECT_EQ(r.input_label(), "2");
    EXPECT_NEAR(r.fidelity_original, 1.0, kExactTolerance);
    EXPECT_NEAR(r.fidelity_clone, 1.0, kExactTolerance);
    EXPECT_EQ(r.ucm_reference, 5.0 / 6.0);
    EXPECT_GT(r.fidelity_clone, r.ucm_reference);
}

TEST(clone, equal_superposition_gives_half) {
    StateVector pair = bell_mix(0, 1, std::numbers::pi / 4);
    auto [o0, o1] = oracle_clone_fidelities(pair);
    EXPECT_NEAR(o0, 0.5, kExactTolerance);
    EXPECT_NEAR(o1, 0.5, kExactTolerance);

    CloneReport r = clone(pair);
    EXPECT_EQ(r.input_label(), "superposition");
    EXPECT_NEAR(r.fidelity_original, 0.5, kExactTolerance);
    EXPECT_NEAR(r.fidelity_clone, 0.5, kExactTolerance);
}

TEST(clone, sixth_pi_superposition) {
    const double theta = std::numbers::pi / 6;
    StateVector pair = bell_mix(0, 1, theta);
    auto [o0, o1] = oracle_clone_fidelities(pair);
    EXPECT_NEAR(o0, 0.625, kExactTolerance);
    EXPECT_NEAR(o1, 0.625, kExactTolerance);

    CloneReport r = clone(pair);
    EXPECT_NEAR(r.fidelity_original, 0.625, kExactTolerance);
    EXPECT_NEAR(r.fidelity_clone, 0.625, kExactTolerance);
}

TEST(clone, no_cloning_grid) {
    for (int k = 1; k <= 17; k++) {
        const double theta = std::numbers::pi / 2 * k / 18;
        const double want = std::pow(std::cos(theta), 4) + std::pow(std::sin(theta), 4);
        StateVector pair = bell_mix(0, 1, theta);
        CloneReport r = clone(pair);
        auto [o0, o1] = oracle_clone_fidelities(pair);
        EXPECT_NEAR(o0, want, kComposedTolerance);
        EXPECT_NEAR(o1, want, kComposedTolerance);
        EXPECT_NEAR(r.fidelity_original, want, kComposedTolerance);
        EXPECT_NEAR(r.fidelity_clone, want, kComposedTolerance);
        EXPECT_LT(r.fidelity_clone, 1 - kComposedTolerance);
    }
}
