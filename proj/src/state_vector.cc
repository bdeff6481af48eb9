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

#include "bellclone/state_vector.h"

#include <algorithm>
#include <cmath>

#include "bellclone/errors.h"

namespace bellclone {

namespace {

void check_register_size(size_t num_qubits) {
    if (num_qubits == 0) {
        throw ContractViolation("a state needs at least one qubit");
    }
    if (num_qubits > kMaxStateQubits) {
        throw SizeLimitExceeded("state of " + std::to_string(num_qubits) + " qubits exceeds the " +
                                std::to_string(kMaxStateQubits) + "-qubit limit");
    }
}

}  // namespace

double norm_of(std::span<const Amplitude> amps) {
    double sum = 0;
    for (const auto &a : amps) {
        sum += std::norm(a);
    }
    return std::sqrt(sum);
}

StateVector::StateVector(size_t num_qubits, std::vector<Amplitude> amps)
    : num_qubits_(num_qubits), amps_(std::move(amps)) {
    check_register_size(num_qubits_);
    if (amps_.size() != (size_t{1} << num_qubits_)) {
        throw ContractViolation("expected " + std::to_string(size_t{1} << num_qubits_) + " amplitudes for " +
                                std::to_string(num_qubits_) + " qubits, got " + std::to_string(amps_.size()));
    }
    for (const auto &a : amps_) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw ContractViolation("state contains a non-finite amplitude");
        }
    }
    double n = norm();
    if (std::abs(n - 1) > kExactTolerance) {
        throw ContractViolation("state is not normalized (norm = " + std::to_string(n) + ")");
    }
}

StateVector StateVector::normalized(size_t num_qubits, std::vector<Amplitude> amps) {
    double n = norm_of(amps);
    if (!(n > 0) || !std::isfinite(n)) {
        throw ContractViolation("cannot normalize a zero or non-finite vector");
    }
    for (auto &a : amps) {
        a /= n;
    }
    return StateVector(num_qubits, std::move(amps));
}

StateVector StateVector::basis(size_t num_qubits, size_t index) {
    check_register_size(num_qubits);
    size_t dim = size_t{1} << num_qubits;
    if (index >= dim) {
        throw ContractViolation("basis index " + std::to_string(index) + " out of range for " +
                                std::to_string(num_qubits) + " qubits");
    }
    std::vector<Amplitude> amps(dim);
    amps[index] = 1;
    return StateVector(num_qubits, std::move(amps));
}

StateVector StateVector::from_bits(std::string_view bits) {
    size_t index = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw ContractViolation("bit string may only contain '0' and '1'");
        }
        index = (index << 1) | static_cast<size_t>(c - '0');
    }
    return basis(bits.size(), index);
}

double StateVector::norm() const {
    return norm_of(amps_);
}

double StateVector::max_abs_diff(const StateVector &other) const {
    if (other.num_qubits_ != num_qubits_) {
        throw ContractViolation("cannot compare states of different qubit counts");
    }
    double worst = 0;
    for (size_t k = 0; k < amps_.size(); k++) {
        worst = std::max(worst, std::abs(amps_[k] - other.amps_[k]));
    }
    return worst;
}

StateVector tensor(const StateVector &a, const StateVector &b) {
    std::vector<Amplitude> out;
    out.reserve(a.dimension() * b.dimension());
    for (const auto &x : a.amplitudes()) {
        for (const auto &y : b.amplitudes()) {
            out.push_back(x * y);
        }
    }
    return StateVector(a.num_qubits() + b.num_qubits(), std::move(out));
}

Amplitude inner_product(const StateVector &a, const StateVector &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw ContractViolation("inner product of states with different qubit counts");
    }
    Amplitude sum = 0;
    for (size_t k = 0; k < a.dimension(); k++) {
        sum += std::conj(a[k]) * b[k];
    }
    return sum;
}

double fidelity_pure(const StateVector &a, const StateVector &b) {
    return std::clamp(std::norm(inner_product(a, b)), 0.0, 1.0);
}

StateVector with_global_phase(const StateVector &state, Amplitude phase) {
    std::vector<Amplitude> amps(state.amplitudes().begin(), state.amplitudes().end());
    for (auto &a : amps) {
        a *= phase;
    }
    return StateVector(state.num_qubits(), std::move(amps));
}

}  // namespace bellclone
