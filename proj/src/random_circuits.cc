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

#include "bellclone/random_circuits.h"

#include <cmath>
#include <numbers>

#include "bellclone/measurement.h"

namespace bellclone {

namespace {

double uniform(std::mt19937_64 &rng) {
    return unit_interval(rng());
}

size_t below(std::mt19937_64 &rng, size_t n) {
    return static_cast<size_t>(uniform(rng) * static_cast<double>(n));
}

double gaussian(std::mt19937_64 &rng) {
    // Box-Muller; 1 - u keeps the log argument in (0, 1].
    double u1 = 1 - uniform(rng);
    double u2 = uniform(rng);
    return std::sqrt(-2 * std::log(u1)) * std::cos(2 * std::numbers::pi * u2);
}

}  // namespace

StateVector random_state(size_t num_qubits, std::mt19937_64 &rng) {
    std::vector<Amplitude> amps(size_t{1} << num_qubits);
    for (auto &a : amps) {
        double re = gaussian(rng);
        double im = gaussian(rng);
        a = {re, im};
    }
    return StateVector::normalized(num_qubits, std::move(amps));
}

SingleQubit random_single_qubit(size_t target, std::mt19937_64 &rng) {
    const double tau = 2 * std::numbers::pi;
    double theta = std::asin(std::sqrt(uniform(rng)));
    double psi = tau * uniform(rng);
    double chi = tau * uniform(rng);
    double alpha = tau * uniform(rng);
    Amplitude g = std::polar(1.0, alpha);
    return SingleQubit{
        target,
        {
            g * std::polar(std::cos(theta), psi),
            g * std::polar(std::sin(theta), chi),
            -g * std::polar(std::sin(theta), -chi),
            g * std::polar(std::cos(theta), -psi),
        },
    };
}

Circuit random_circuit(size_t num_qubits, size_t depth, std::mt19937_64 &rng) {
    Circuit c(num_qubits);
    for (size_t d = 0; d < depth; d++) {
        size_t kind = below(rng, 5);
        size_t target = below(rng, num_qubits);
        if (kind == 3 && num_qubits == 1) {
            kind = 4;
        }
        switch (kind) {
            case 0:
                c.append(Hadamard{target});
                break;
            case 1:
                c.append(PauliX{target});
                break;
            case 2:
                c.append(PauliZ{target});
                break;
            case 3: {
                size_t control = below(rng, num_qubits - 1);
                if (control >= target) {
                    control++;
                }
                c.append(Cnot{control, target});
                break;
            }
            default:
                c.append(random_single_qubit(target, rng));
                break;
        }
    }
    return c;
}

}  // namespace bellclone
