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

#ifndef BELLCLONE_DENSITY_MATRIX_H
#define BELLCLONE_DENSITY_MATRIX_H

#include <initializer_list>
#include <span>

#include "bellclone/dense.h"
#include "bellclone/state_vector.h"

namespace bellclone {

/// Hermitian, unit-trace, positive semidefinite operator on `num_qubits` qubits.
/// Indexing follows the same most-significant-first convention as StateVector.
class DensityMatrix {
   public:
    /// Validates shape, hermiticity (1e-12), trace (1e-12) and eigenvalues >= -1e-10.
    DensityMatrix(size_t num_qubits, DenseMatrix entries);

    /// |psi><psi|
    static DensityMatrix pure(const StateVector &psi);

    size_t num_qubits() const {
        return num_qubits_;
    }
    const DenseMatrix &entries() const {
        return entries_;
    }
    Amplitude operator()(size_t row, size_t col) const {
        return entries_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
    }

    /// Tr(rho^2); 1 exactly for pure states.
    double purity() const;

   private:
    size_t num_qubits_;
    DenseMatrix entries_;
};

/// Reduced state of the qubits in `keep`, tracing out all others. The kept
/// qubits appear in the listed order, keep[0] being the most significant.
DensityMatrix partial_trace(const StateVector &state, std::span<const size_t> keep);
DensityMatrix partial_trace(const StateVector &state, std::initializer_list<size_t> keep);

/// <psi|rho|psi>, clamped into [0, 1].
double fidelity_mixed(const DensityMatrix &rho, const StateVector &psi);

}  // namespace bellclone

#endif
