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

#include "bellclone/bell.h"

#include <cmath>

#include "bellclone/errors.h"

namespace bellclone {

BellIndex::BellIndex(int value) : value_(0) {
    if (value < 0 || value > 3) {
        throw ContractViolation("Bell index must be in 0..3, got " + std::to_string(value));
    }
    value_ = static_cast<uint8_t>(value);
}

BellIndex BellIndex::from_bits(std::string_view bits) {
    if (bits.size() != 2 || (bits[0] != '0' && bits[0] != '1') || (bits[1] != '0' && bits[1] != '1')) {
        throw ContractViolation("Bell index bits must be two binary digits, got '" + std::string(bits) + "'");
    }
    return BellIndex((bits[0] - '0') * 2 + (bits[1] - '0'));
}

std::string BellIndex::bits() const {
    return {static_cast<char>('0' + (value_ >> 1)), static_cast<char>('0' + (value_ & 1))};
}

std::array<BellIndex, 4> BellIndex::all() {
    return {BellIndex(0), BellIndex(1), BellIndex(2), BellIndex(3)};
}

StateVector bell_state(BellIndex index) {
    const double r = 1 / std::sqrt(2.0);
    switch (index.value()) {
        case 0:
            return StateVector(2, {r, 0, 0, r});
        case 1:
            return StateVector(2, {0, r, r, 0});
        case 2:
            return StateVector(2, {r, 0, 0, -r});
        default:
            return StateVector(2, {0, r, -r, 0});
    }
}

Circuit bell_encode_circuit() {
    return Circuit(2, {Hadamard{0}, Cnot{0, 1}});
}

Circuit bell_decode_circuit() {
    return Circuit(2, {Cnot{0, 1}, Hadamard{0}});
}

std::optional<BellIndex> bell_index_of(const StateVector &state) {
    if (state.num_qubits() != 2) {
        return std::nullopt;
    }
    for (auto i : BellIndex::all()) {
        if (fidelity_pure(state, bell_state(i)) > 1 - kComposedTolerance) {
            return i;
        }
    }
    return std::nullopt;
}

}  // namespace bellclone
