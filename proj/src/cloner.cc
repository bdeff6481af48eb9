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

#include "bellclone/density_matrix.h"
#include "bellclone/errors.h"
#include "bellclone/measurement.h"

namespace bellclone {

namespace {

constexpr size_t kAncillas[] = {2, 3};

}  // namespace

Circuit tgp_circuit() {
    Circuit c(4);
    c.append(bell_decode_circuit(), {0, 1});
    c.append(Cnot{0, 2});
    c.append(Cnot{1, 3});
    c.append(bell_encode_circuit(), {0, 1});
    return c;
}

Circuit clone_circuit() {
    Circuit c = tgp_circuit();
    c.append(bell_encode_circuit(), {2, 3});
    return c;
}

StateVector with_fresh_ancillas(const StateVector &pair) {
    if (pair.num_qubits() != 2) {
        throw ContractViolation("expected a 2-qubit input, got " + std::to_string(pair.num_qubits()) + " qubits");
    }
    return tensor(pair, StateVector::basis(2, 0));
}

IdentificationResult identify(const StateVector &pair, uint64_t random_seed) {
    return identify(pair, random_seed, tgp_circuit());
}

IdentificationResult identify(const StateVector &pair, uint64_t random_seed, const Circuit &transform) {
    StateVector out = apply_circuit(with_fresh_ancillas(pair), transform);
    MeasurementRecord m = measure(out, kAncillas, random_seed);
    return IdentificationResult{
        .index = BellIndex::from_bits(m.outcome),
        .outcome_bits = m.outcome,
        .probability = m.probability,
        .residual_state = remaining_state(m.post_state, kAncillas, m.outcome),
    };
}

std::string CloneReport::input_label() const {
    return input_index ? std::to_string(input_index->value()) : "superposition";
}

CloneReport clone(const StateVector &pair) {
    return clone(pair, clone_circuit());
}

CloneReport clone(const StateVector &pair, const Circuit &cloner) {
    StateVector joint = apply_circuit(with_fresh_ancillas(pair), cloner);
    return CloneReport{
        .input_index = bell_index_of(pair),
        .joint_state = joint,
        .fidelity_original = fidelity_mixed(partial_trace(joint, {0, 1}), pair),
        .fidelity_clone = fidelity_mixed(partial_trace(joint, {2, 3}), pair),
    };
}

}  // namespace bellclone
