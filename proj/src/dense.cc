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

#include <cmath>

#include "bellclone/errors.h"

namespace bellclone {

namespace {

template <class... Fs>
struct overloaded : Fs... {
    using Fs::operator()...;
};

DenseMatrix kron(const DenseMatrix &a, const DenseMatrix &b) {
    DenseMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); i++) {
        for (Eigen::Index j = 0; j < a.cols(); j++) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

DenseMatrix two_by_two(Amplitude m00, Amplitude m01, Amplitude m10, Amplitude m11) {
    DenseMatrix m(2, 2);
    m << m00, m01, m10, m11;
    return m;
}

// I (x) ... (x) factors[q] (x) ... (x) I, with identity wherever factors has no entry.
DenseMatrix embed(size_t num_qubits, const std::vector<std::pair<size_t, DenseMatrix>> &factors) {
    DenseMatrix out = DenseMatrix::Identity(1, 1);
    for (size_t q = 0; q < num_qubits; q++) {
        DenseMatrix f = DenseMatrix::Identity(2, 2);
        for (const auto &[qubit, m] : factors) {
            if (qubit == q) {
                f = m;
            }
        }
        out = kron(out, f);
    }
    return out;
}

}  // namespace

DenseMatrix gate_unitary(const Gate &gate, size_t num_qubits) {
    validate_gate(gate, num_qubits);
    if (num_qubits > kMaxDenseQubits) {
        throw SizeLimitExceeded("dense expansion refused above " + std::to_string(kMaxDenseQubits) + " qubits");
    }
    const double r = 1 / std::sqrt(2.0);
    return std::visit(
        overloaded{
            [&](const Hadamard &g) { return embed(num_qubits, {{g.target, two_by_two(r, r, r, -r)}}); },
            [&](const PauliX &g) { return embed(num_qubits, {{g.target, two_by_two(0, 1, 1, 0)}}); },
            [&](const PauliZ &g) { return embed(num_qubits, {{g.target, two_by_two(1, 0, 0, -1)}}); },
            [&](const Cnot &g) {
                // |0><0|_c (x) I + |1><1|_c (x) X_t
                DenseMatrix p0 = two_by_two(1, 0, 0, 0);
                DenseMatrix p1 = two_by_two(0, 0, 0, 1);
                DenseMatrix x = two_by_two(0, 1, 1, 0);
                DenseMatrix m = embed(num_qubits, {{g.control, p0}});
                m += embed(num_qubits, {{g.control, p1}, {g.target, x}});
                return m;
            },
            [&](const SingleQubit &g) {
                const auto &m = g.matrix;
                return embed(num_qubits, {{g.target, two_by_two(m[0], m[1], m[2], m[3])}});
            },
        },
        gate);
}

DenseMatrix circuit_unitary(const Circuit &circuit) {
    const size_t n = circuit.num_qubits();
    if (n > kMaxDenseQubits) {
        throw SizeLimitExceeded("circuit_unitary refuses " + std::to_string(n) + " qubits (limit " +
                                std::to_string(kMaxDenseQubits) + ")");
    }
    const Eigen::Index dim = Eigen::Index{1} << n;
    DenseMatrix u = DenseMatrix::Identity(dim, dim);
    for (const auto &g : circuit.ops()) {
        u = gate_unitary(g, n) * u;
    }
    return u;
}

StateVector apply_dense(const DenseMatrix &matrix, const StateVector &state) {
    const auto dim = static_cast<Eigen::Index>(state.dimension());
    if (matrix.rows() != dim || matrix.cols() != dim) {
        throw ContractViolation("matrix and state dimensions differ");
    }
    Eigen::VectorXcd v(dim);
    for (Eigen::Index k = 0; k < dim; k++) {
        v(k) = state[static_cast<size_t>(k)];
    }
    Eigen::VectorXcd w = matrix * v;
    return StateVector::normalized(state.num_qubits(), std::vector<Amplitude>(w.data(), w.data() + w.size()));
}

double unitarity_deviation(const DenseMatrix &u) {
    if (u.rows() != u.cols()) {
        throw ContractViolation("unitarity check needs a square matrix");
    }
    DenseMatrix d = u.adjoint() * u - DenseMatrix::Identity(u.rows(), u.cols());
    return d.cwiseAbs().maxCoeff();
}

StateVector column_state(const DenseMatrix &m, size_t k) {
    const auto dim = static_cast<size_t>(m.rows());
    size_t n = 0;
    while ((size_t{1} << n) < dim) {
        n++;
    }
    if ((size_t{1} << n) != dim || k >= static_cast<size_t>(m.cols())) {
        throw ContractViolation("column index out of range or dimension not a power of two");
    }
    std::vector<Amplitude> amps(dim);
    for (size_t j = 0; j < dim; j++) {
        amps[j] = m(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k));
    }
    return StateVector(n, std::move(amps));
}

}  // namespace bellclone
