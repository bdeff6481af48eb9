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

#ifndef BELLCLONE_DENSE_H
#define BELLCLONE_DENSE_H

#include <Eigen/Dense>

#include "bellclone/circuit.h"
#include "bellclone/state_vector.h"

namespace bellclone {

using DenseMatrix = Eigen::MatrixXcd;

/// Largest circuit `circuit_unitary` will expand.
inline constexpr size_t kMaxDenseQubits = 12;

/// Full 2^n x 2^n matrix of a single gate embedded in an n-qubit register,
/// assembled from Kronecker products of 2x2 blocks.
DenseMatrix gate_unitary(const Gate &gate, size_t num_qubits);

/// Product G_k ... G_1 of the circuit's gate matrices. This is the
/// brute-force reference for the strided kernels in apply_circuit and
/// shares no code with them.
///
/// Throws SizeLimitExceeded above kMaxDenseQubits.
DenseMatrix circuit_unitary(const Circuit &circuit);

/// Plain matrix-vector product, renormalized to absorb rounding.
StateVector apply_dense(const DenseMatrix &matrix, const StateVector &state);

/// max |(U^dagger U - I)_{jk}|.
double unitarity_deviation(const DenseMatrix &u);

/// Column `k` of `m` as a state (must be unit norm).
StateVector column_state(const DenseMatrix &m, size_t k);

}  // namespace bellclone

#endif
