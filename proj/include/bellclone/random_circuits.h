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

#ifndef BELLCLONE_RANDOM_CIRCUITS_H
#define BELLCLONE_RANDOM_CIRCUITS_H

#include <random>

#include "bellclone/circuit.h"
#include "bellclone/state_vector.h"

namespace bellclone {

// Generators for property checks. All draws go through unit_interval so the
// sequences are identical across standard library implementations.

/// Gaussian-distributed amplitudes, normalized (uniform on the unit sphere).
StateVector random_state(size_t num_qubits, std::mt19937_64 &rng);

/// Random element of U(2) from Euler angles and a global phase.
SingleQubit random_single_qubit(size_t target, std::mt19937_64 &rng);

/// `depth` gates drawn uniformly from {H, X, Z, CNOT, random U(2)}; CNOT is
/// skipped in favour of a single-qubit gate on one-qubit registers.
Circuit random_circuit(size_t num_qubits, size_t depth, std::mt19937_64 &rng);

}  // namespace bellclone

#endif
