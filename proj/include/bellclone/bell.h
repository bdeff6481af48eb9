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

#ifndef BELLCLONE_BELL_H
#define BELLCLONE_BELL_H

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "bellclone/circuit.h"
#include "bellclone/state_vector.h"

namespace bellclone {

/// Label of a Bell state by the computational basis state it is encoded from:
/// 0 <-> |00>, 1 <-> |01>, 2 <-> |10>, 3 <-> |11>.
class BellIndex {
   public:
    /// Throws ContractViolation unless value < 4.
    explicit BellIndex(int value);

    /// Inverse of bits(); accepts "00", "01", "10", "11".
    static BellIndex from_bits(std::string_view bits);

    int value() const {
        return value_;
    }
    /// Two-character label of the originating basis state.
    std::string bits() const;

    static std::array<BellIndex, 4> all();

    auto operator<=>(const BellIndex &) const = default;

   private:
    uint8_t value_;
};

/// |b0> = (|00> + |11>)/sqrt2
/// |b1> = (|01> + |10>)/sqrt2
/// |b2> = (|00> - |11>)/sqrt2
/// |b3> = (|01> - |10>)/sqrt2
StateVector bell_state(BellIndex index);

/// H on qubit 0 then CNOT(0 -> 1). Maps |bin(i)> to bell_state(i).
Circuit bell_encode_circuit();

/// CNOT(0 -> 1) then H on qubit 0. Inverse of bell_encode_circuit.
Circuit bell_decode_circuit();

/// Returns i when `state` matches bell_state(i) up to global phase, i.e.
/// fidelity above 1 - 1e-10. Otherwise nullopt.
std::optional<BellIndex> bell_index_of(const StateVector &state);

}  // namespace bellclone

#endif
