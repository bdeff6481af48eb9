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

#include <algorithm>
#include <cmath>
#include <vector>

#include "bellclone/errors.h"

namespace bellclone {

DensityMatrix::DensityMatrix(size_t num_qubits, DenseMatrix entries)
    : num_qubits_(num_qubits), entries_(std::move(entries)) {
    if (num_qubits_ == 0 || num_qubits_ > kMaxDenseQubits) {
        throw ContractViolation("density matrix qubit count must be in [1, " + std::to_string(kMaxDenseQubits) + "]");
    }
    const Eigen::Index dim = Eigen::Index{1} << num_qubits_;
    if (entries_.rows() != dim || entries_.cols() != dim) {
        throw ContractViolation("density matrix must be " + std::to_string(dim) + "x" + std::to_string(dim));
    }
    if (!entries_.allFinite()) {
        throw ContractViolation("density matrix has a non-finite entry");
    }
    if ((entries_ - entries_.adjoint()).cwiseAbs().maxCoeff() > kExactTolerance) {
        throw ContractViolation("density matrix is not Hermitian");
    }
    if (std::abs(entries_.trace() - Amplitude(1)) > kExactTolerance) {
        throw ContractViolation("density matrix trace is not 1");
    }
    Eigen::SelfAdjointEigenSolver<DenseMatrix> solver(entries_, Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < -kComposedTolerance) {
        throw ContractViolation("density matrix has a negative eigenvalue");
    }
}

DensityMatrix DensityMatrix::pure(const StateVector &psi) {
    const auto dim = static_cast<Eigen::Index>(psi.dimension());
    DenseMatrix m(dim, dim);
    for (Eigen::Index i = 0; i < dim; i++) {
        for (Eigen::Index j = 0; j < dim; j++) {
            m(i, j) = psi[static_cast<size_t>(i)] * std::conj(psi[static_cast<size_t>(j)]);
        }
    }
    return DensityMatrix(psi.num_qubits(), std::move(m));
}

double DensityMatrix::purity() const {
    return (entries_ * entries_).trace().real();
}

DensityMatrix partial_trace(const StateVector &state, std::span<const size_t> keep) {
    const size_t n = state.num_qubits();
    if (keep.empty()) {
        throw ContractViolation("partial_trace must keep at least one qubit");
    }
    std::vector<bool> kept(n, false);
    for (size_t q : keep) {
        if (q >= n) {
            throw ContractViolation("partial_trace qubit " + std::to_string(q) + " out of range");
        }
        if (kept[q]) {
            throw ContractViolation("partial_trace keeps qubit " + std::to_string(q) + " twice");
        }
        kept[q] = true;
    }
    std::vector<size_t> traced;
    for (size_t q = 0; q < n; q++) {
        if (!kept[q]) {
            traced.push_back(q);
        }
    }

    // Full-register index from a kept-qubit index and a traced-qubit index.
    auto scatter = [&](size_t bits, std::span<const size_t> qubits) {
        size_t index = 0;
        const size_t m = qubits.size();
        for (size_t j = 0; j < m; j++) {
            if ((bits >> (m - 1 - j)) & 1) {
                index |= size_t{1} << bit_of_qubit(n, qubits[j]);
            }
        }
        return index;
    };

    const size_t keep_dim = size_t{1} << keep.size();
    const size_t env_dim = size_t{1} << traced.size();
    std::vector<size_t> keep_offset(keep_dim);
    for (size_t a = 0; a < keep_dim; a++) {
        keep_offset[a] = scatter(a, keep);
    }

    DenseMatrix rho = DenseMatrix::Zero(static_cast<Eigen::Index>(keep_dim), static_cast<Eigen::Index>(keep_dim));
    for (size_t e = 0; e < env_dim; e++) {
        const size_t env_offset = scatter(e, traced);
        for (size_t a = 0; a < keep_dim; a++) {
            const Amplitude x = state[keep_offset[a] | env_offset];
            if (x == Amplitude(0)) {
                continue;
            }
            for (size_t b = 0; b < keep_dim; b++) {
                rho(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) +=
                    x * std::conj(state[keep_offset[b] | env_offset]);
            }
        }
    }
    return DensityMatrix(keep.size(), std::move(rho));
}

DensityMatrix partial_trace(const StateVector &state, std::initializer_list<size_t> keep) {
    return partial_trace(state, std::span<const size_t>(keep.begin(), keep.size()));
}

double fidelity_mixed(const DensityMatrix &rho, const StateVector &psi) {
    if (rho.num_qubits() != psi.num_qubits()) {
        throw ContractViolation("fidelity_mixed: density matrix and state have different qubit counts");
    }
    const auto dim = static_cast<Eigen::Index>(psi.dimension());
    Eigen::VectorXcd v(dim);
    for (Eigen::Index k = 0; k < dim; k++) {
        v(k) = psi[static_cast<size_t>(k)];
    }
    const Amplitude f = v.dot(rho.entries() * v);  // dot conjugates the left operand
    return std::clamp(f.real(), 0.0, 1.0);
}

}  // namespace bellclone
