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

#include "bellclone/measurement.h"

#include <random>

#include "bellclone/errors.h"

namespace bellclone {

namespace {

void check_qubits(size_t num_qubits, std::span<const size_t> qubits) {
    if (qubits.empty()) {
        throw ContractViolation("measurement needs at least one qubit");
    }
    std::vector<bool> seen(num_qubits, false);
    for (size_t q : qubits) {
        if (q >= num_qubits) {
            throw ContractViolation("measured qubit " + std::to_string(q) + " out of range");
        }
        if (seen[q]) {
            throw ContractViolation("qubit " + std::to_string(q) + " measured twice");
        }
        seen[q] = true;
    }
}

// Outcome value (qubits[0] most significant) of basis index k.
size_t outcome_of(size_t k, size_t num_qubits, std::span<const size_t> qubits) {
    size_t v = 0;
    for (size_t q : qubits) {
        v = (v << 1) | ((k >> bit_of_qubit(num_qubits, q)) & 1);
    }
    return v;
}

std::string bits_string(size_t value, size_t width) {
    std::string s(width, '0');
    for (size_t j = 0; j < width; j++) {
        if ((value >> (width - 1 - j)) & 1) {
            s[j] = '1';
        }
    }
    return s;
}

std::vector<double> outcome_probabilities(const StateVector &state, std::span<const size_t> qubits) {
    std::vector<double> p(size_t{1} << qubits.size(), 0.0);
    for (size_t k = 0; k < state.dimension(); k++) {
        p[outcome_of(k, state.num_qubits(), qubits)] += std::norm(state[k]);
    }
    return p;
}

size_t parse_outcome(std::string_view outcome, size_t width) {
    if (outcome.size() != width) {
        throw ContractViolation("outcome '" + std::string(outcome) + "' has wrong width");
    }
    size_t v = 0;
    for (char c : outcome) {
        if (c != '0' && c != '1') {
            throw ContractViolation("outcome may only contain '0' and '1'");
        }
        v = (v << 1) | static_cast<size_t>(c - '0');
    }
    return v;
}

}  // namespace

double unit_interval(uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

std::map<std::string, double> measurement_distribution(const StateVector &state, std::span<const size_t> qubits) {
    check_qubits(state.num_qubits(), qubits);
    auto p = outcome_probabilities(state, qubits);
    std::map<std::string, double> out;
    for (size_t v = 0; v < p.size(); v++) {
        if (p[v] > 0) {
            out.emplace(bits_string(v, qubits.size()), p[v]);
        }
    }
    return out;
}

std::map<std::string, double> measurement_distribution(const StateVector &state,
                                                       std::initializer_list<size_t> qubits) {
    return measurement_distribution(state, std::span<const size_t>(qubits.begin(), qubits.size()));
}

MeasurementRecord measure(const StateVector &state, std::span<const size_t> qubits, uint64_t random_seed) {
    check_qubits(state.num_qubits(), qubits);
    auto p = outcome_probabilities(state, qubits);

    std::mt19937_64 rng(random_seed);
    double u = unit_interval(rng());
    double total = 0;
    for (double x : p) {
        total += x;
    }
    u *= total;

    // Last outcome with nonzero weight absorbs any rounding shortfall.
    size_t chosen = 0;
    double acc = 0;
    for (size_t v = 0; v < p.size(); v++) {
        if (p[v] <= 0) {
            continue;
        }
        chosen = v;
        acc += p[v];
        if (u < acc) {
            break;
        }
    }

    const size_t n = state.num_qubits();
    std::vector<Amplitude> projected(state.dimension());
    for (size_t k = 0; k < state.dimension(); k++) {
        if (outcome_of(k, n, qubits) == chosen) {
            projected[k] = state[k];
        }
    }
    return MeasurementRecord{
        .measured_qubits = std::vector<size_t>(qubits.begin(), qubits.end()),
        .outcome = bits_string(chosen, qubits.size()),
        .probability = std::min(p[chosen], 1.0),
        .post_state = StateVector::normalized(n, std::move(projected)),
    };
}

MeasurementRecord measure(const StateVector &state, std::initializer_list<size_t> qubits, uint64_t random_seed) {
    return measure(state, std::span<const size_t>(qubits.begin(), qubits.size()), random_seed);
}

StateVector remaining_state(const StateVector &state, std::span<const size_t> qubits, std::string_view outcome) {
    const size_t n = state.num_qubits();
    check_qubits(n, qubits);
    if (qubits.size() == n) {
        throw ContractViolation("no qubits remain after measuring all of them");
    }
    const size_t want = parse_outcome(outcome, qubits.size());

    std::vector<bool> measured(n, false);
    for (size_t q : qubits) {
        measured[q] = true;
    }
    std::vector<size_t> rest;
    for (size_t q = 0; q < n; q++) {
        if (!measured[q]) {
            rest.push_back(q);
        }
    }

    std::vector<Amplitude> out(size_t{1} << rest.size());
    for (size_t k = 0; k < state.dimension(); k++) {
        if (outcome_of(k, n, qubits) == want) {
            out[outcome_of(k, n, rest)] = state[k];
        }
    }
    return StateVector::normalized(rest.size(), std::move(out));
}

}  // namespace bellclone
