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

#ifndef BELLCLONE_STATE_VECTOR_H
#define BELLCLONE_STATE_VECTOR_H

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bellclone {

using Amplitude = std::complex<double>;

/// Tolerance for checks on states built from exact 1/sqrt(2) constants.
inline constexpr double kExactTolerance = 1e-12;
/// Tolerance for randomized or composed checks.
inline constexpr double kComposedTolerance = 1e-10;

/// Largest register the library will allocate a state for.
inline constexpr size_t kMaxStateQubits = 24;

/// A normalized pure state of `num_qubits` qubits.
///
/// Amplitude index k corresponds to the ket |q0 q1 ... q_{n-1}> with q0 the
/// leftmost symbol and the most significant bit: k = sum_j q_j 2^(n-1-j).
/// So |01> is index 1 and |10> is index 2.
class StateVector {
   public:
    /// Validates length (2^n), finiteness and unit norm (within 1e-12).
    StateVector(size_t num_qubits, std::vector<Amplitude> amps);

    /// Scales `amps` to unit norm before validating. Rejects the zero vector.
    static StateVector normalized(size_t num_qubits, std::vector<Amplitude> amps);

    /// The computational basis state |bin(index)>.
    static StateVector basis(size_t num_qubits, size_t index);

    /// Parses a ket label such as "0110" into the matching basis state.
    static StateVector from_bits(std::string_view bits);

    size_t num_qubits() const {
        return num_qubits_;
    }
    size_t dimension() const {
        return amps_.size();
    }
    std::span<const Amplitude> amplitudes() const {
        return amps_;
    }
    Amplitude operator[](size_t index) const {
        return amps_[index];
    }

    double norm() const;

    /// Largest elementwise |a_k - b_k|. Dimensions must agree.
    double max_abs_diff(const StateVector &other) const;

    bool operator==(const StateVector &other) const = default;

   private:
    size_t num_qubits_;
    std::vector<Amplitude> amps_;
};

/// Kronecker product; the qubits of `a` become the leftmost qubits.
StateVector tensor(const StateVector &a, const StateVector &b);

/// <a|b>, conjugate-linear in `a`.
Amplitude inner_product(const StateVector &a, const StateVector &b);

/// |<a|b>|^2, clamped into [0, 1].
double fidelity_pure(const StateVector &a, const StateVector &b);

/// Multiplies every amplitude by a unit-modulus phase.
StateVector with_global_phase(const StateVector &state, Amplitude phase);

/// Bit position (counted from the least significant end) of qubit `q`.
inline size_t bit_of_qubit(size_t num_qubits, size_t q) {
    return num_qubits - 1 - q;
}

/// Euclidean norm of a raw amplitude span.
double norm_of(std::span<const Amplitude> amps);

}  // namespace bellclone

#endif
