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

#include "bellclone/verification.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <random>

#include "bellclone/bell.h"
#include "bellclone/cloner.h"
#include "bellclone/dense.h"
#include "bellclone/density_matrix.h"
#include "bellclone/measurement.h"
#include "bellclone/random_circuits.h"

namespace bellclone {

namespace {

constexpr size_t kRandomCircuits = 200;
constexpr size_t kMaxRandomQubits = 4;
constexpr size_t kMaxRandomDepth = 12;
constexpr size_t kBornShots = 10000;
constexpr double kBornSigmas = 5;
constexpr size_t kNondisturbanceSeeds = 100;
constexpr size_t kThetaGridPoints = 17;

CheckResult finish(std::string name, double tolerance, double deviation, std::string note = "") {
    return CheckResult{std::move(name), tolerance, deviation, deviation <= tolerance, std::move(note)};
}

double matrix_deviation(const DenseMatrix &a, const DenseMatrix &b) {
    return (a - b).cwiseAbs().maxCoeff();
}

size_t random_size(std::mt19937_64 &rng, size_t lo, size_t hi) {
    return lo + static_cast<size_t>(unit_interval(rng()) * static_cast<double>(hi - lo + 1));
}

StateVector bell_with_ancillas(BellIndex i, size_t ancilla_bits) {
    return tensor(bell_state(i), StateVector::basis(2, ancilla_bits));
}

}  // namespace

CircuitSet CircuitSet::standard() {
    return CircuitSet{bell_encode_circuit(), bell_decode_circuit(), tgp_circuit(), clone_circuit()};
}

bool all_passed(const std::vector<CheckResult> &results) {
    return std::all_of(results.begin(), results.end(), [](const CheckResult &r) { return r.passed; });
}

std::vector<CheckResult> run_verification(const CircuitSet &circuits, uint64_t seed) {
    std::vector<CheckResult> out;
    std::mt19937_64 rng(seed);
    const double r = 1 / std::sqrt(2.0);

    // Generic simulator invariants.
    {
        double dev = 0;
        for (size_t t = 0; t < kRandomCircuits; t++) {
            size_t n = random_size(rng, 1, kMaxRandomQubits);
            StateVector s = random_state(n, rng);
            Circuit one = random_circuit(n, 1, rng);
            dev = std::max(dev, std::abs(apply_gate(s, one.ops()[0]).norm() - 1));
        }
        out.push_back(finish("norm preservation", kExactTolerance, dev));
    }
    {
        double dev = 0;
        for (size_t t = 0; t < kRandomCircuits; t++) {
            size_t n = random_size(rng, 1, kMaxRandomQubits);
            StateVector u = random_state(n, rng);
            StateVector v = random_state(n, rng);
            double angle = std::numbers::pi / 2 * unit_interval(rng());
            Amplitude alpha = std::polar(std::cos(angle), 2 * std::numbers::pi * unit_interval(rng()));
            Amplitude beta = std::polar(std::sin(angle), 2 * std::numbers::pi * unit_interval(rng()));
            Circuit c = random_circuit(n, random_size(rng, 0, kMaxRandomDepth), rng);

            std::vector<Amplitude> mix(u.dimension());
            for (size_t k = 0; k < mix.size(); k++) {
                mix[k] = alpha * u[k] + beta * v[k];
            }
            double scale = norm_of(mix);
            StateVector w = apply_circuit(StateVector::normalized(n, mix), c);
            StateVector cu = apply_circuit(u, c);
            StateVector cv = apply_circuit(v, c);
            for (size_t k = 0; k < mix.size(); k++) {
                dev = std::max(dev, std::abs(scale * w[k] - (alpha * cu[k] + beta * cv[k])));
            }
        }
        out.push_back(finish("linearity", kComposedTolerance, dev));
    }
    {
        double equiv = 0;
        double unitarity = 0;
        for (size_t t = 0; t < kRandomCircuits; t++) {
            size_t n = random_size(rng, 1, kMaxRandomQubits);
            Circuit c = random_circuit(n, random_size(rng, 0, kMaxRandomDepth), rng);
            StateVector s = random_state(n, rng);
            DenseMatrix u = circuit_unitary(c);
            equiv = std::max(equiv, apply_circuit(s, c).max_abs_diff(apply_dense(u, s)));
            unitarity = std::max(unitarity, unitarity_deviation(u));
        }
        out.push_back(finish("oracle equivalence (strided vs dense)", kComposedTolerance, equiv,
                             std::to_string(kRandomCircuits) + " random circuits"));
        out.push_back(finish("dense unitarity", kComposedTolerance, unitarity));
    }
    {
        double dev = 0;
        for (size_t t = 0; t < kRandomCircuits; t++) {
            size_t n = random_size(rng, 1, kMaxRandomQubits);
            StateVector s = random_state(n, rng);
            std::vector<size_t> qubits(n);
            for (size_t q = 0; q < n; q++) {
                qubits[q] = q;
            }
            std::shuffle(qubits.begin(), qubits.end(), rng);
            qubits.resize(random_size(rng, 1, n));
            double total = 0;
            for (const auto &[bits, p] : measurement_distribution(s, qubits)) {
                if (p < 0) {
                    dev = std::numeric_limits<double>::infinity();
                }
                total += p;
            }
            dev = std::max(dev, std::abs(total - 1));
        }
        out.push_back(finish("Born distribution normalization", kExactTolerance, dev));
    }
    {
        // Superposition of b0 and b1 fans out to ancilla outcomes "00"/"01".
        std::vector<Amplitude> mix(4);
        for (size_t k = 0; k < 4; k++) {
            mix[k] = r * (bell_state(BellIndex(0))[k] + bell_state(BellIndex(1))[k]);
        }
        StateVector in = with_fresh_ancillas(StateVector::normalized(2, mix));
        StateVector s = apply_circuit(in, circuits.tgp);
        auto dist = measurement_distribution(s, {2, 3});
        std::map<std::string, size_t> counts;
        for (size_t shot = 0; shot < kBornShots; shot++) {
            counts[measure(s, {2, 3}, seed * kBornShots + shot).outcome]++;
        }
        double worst = 0;
        for (const auto &[bits, c] : counts) {
            double p = dist.count(bits) ? dist.at(bits) : 0.0;
            double sigma = std::sqrt(kBornShots * p * (1 - p));
            double diff = std::abs(static_cast<double>(c) - kBornShots * p);
            if (sigma > 0) {
                worst = std::max(worst, diff / sigma);
            } else if (diff > 0) {
                worst = std::numeric_limits<double>::infinity();
            }
        }
        out.push_back(finish("Born sampling statistics", kBornSigmas, worst,
                             std::to_string(kBornShots) + " shots, deviation in binomial sigmas"));
    }
    {
        double dev = 0;
        for (size_t t = 0; t < kRandomCircuits; t++) {
            size_t na = random_size(rng, 1, 3);
            size_t nb = random_size(rng, 1, 3);
            StateVector a = random_state(na, rng);
            StateVector b = random_state(nb, rng);
            std::vector<size_t> keep(na);
            for (size_t q = 0; q < na; q++) {
                keep[q] = q;
            }
            DensityMatrix reduced = partial_trace(tensor(a, b), keep);
            dev = std::max(dev, matrix_deviation(reduced.entries(), DensityMatrix::pure(a).entries()));
        }
        out.push_back(finish("partial trace of product states", kExactTolerance, dev));
    }
    {
        double dev = 0;
        for (size_t t = 0; t < kRandomCircuits; t++) {
            size_t n = random_size(rng, 1, kMaxRandomQubits);
            StateVector psi = random_state(n, rng);
            StateVector phi = random_state(n, rng);
            dev = std::max(dev, std::abs(fidelity_mixed(DensityMatrix::pure(psi), phi) - fidelity_pure(psi, phi)));
        }
        out.push_back(finish("mixed vs pure fidelity", kExactTolerance, dev));
    }

    // Bell basis.
    {
        const double literal[4][4] = {{r, 0, 0, r}, {0, r, r, 0}, {r, 0, 0, -r}, {0, r, -r, 0}};
        double dev = 0;
        for (auto i : BellIndex::all()) {
            StateVector b = bell_state(i);
            for (size_t k = 0; k < 4; k++) {
                dev = std::max(dev, std::abs(b[k] - Amplitude(literal[i.value()][k])));
            }
        }
        out.push_back(finish("Bell states literal amplitudes", kExactTolerance, dev));
    }
    {
        double dev = 0;
        for (auto i : BellIndex::all()) {
            for (auto j : BellIndex::all()) {
                double expected = i == j ? 1.0 : 0.0;
                dev = std::max(dev, std::abs(fidelity_pure(bell_state(i), bell_state(j)) - expected));
            }
        }
        out.push_back(finish("Bell orthonormality", kExactTolerance, dev));
    }
    {
        double dev = 0;
        DenseMatrix u = circuit_unitary(circuits.encode);
        for (auto i : BellIndex::all()) {
            auto k = static_cast<size_t>(i.value());
            dev = std::max(dev, column_state(u, k).max_abs_diff(bell_state(i)));
            dev = std::max(dev, apply_circuit(StateVector::basis(2, k), circuits.encode).max_abs_diff(bell_state(i)));
        }
        out.push_back(finish("encode maps basis to Bell states", kExactTolerance, dev));
    }
    {
        DenseMatrix product = circuit_unitary(circuits.decode) * circuit_unitary(circuits.encode);
        double dev = matrix_deviation(product, DenseMatrix::Identity(4, 4));
        for (auto i : BellIndex::all()) {
            auto k = static_cast<size_t>(i.value());
            dev = std::max(dev, apply_circuit(bell_state(i), circuits.decode).max_abs_diff(StateVector::basis(2, k)));
        }
        out.push_back(finish("decode inverts encode", kExactTolerance, dev));
    }
    {
        double mismatches = 0;
        for (auto i : BellIndex::all()) {
            auto got = bell_index_of(apply_circuit(StateVector::basis(2, static_cast<size_t>(i.value())), circuits.encode));
            if (!got || *got != i) {
                mismatches++;
            }
        }
        out.push_back(finish("Bell round trip", 0, mismatches, "deviation counts mismatched indices"));
    }

    // Discrimination and cloning.
    {
        double dev = 0;
        double point_mass = 0;
        for (auto i : BellIndex::all()) {
            auto bits = static_cast<size_t>(i.value());
            StateVector got = apply_circuit(bell_with_ancillas(i, 0), circuits.tgp);
            dev = std::max(dev, got.max_abs_diff(bell_with_ancillas(i, bits)));
            auto dist = measurement_distribution(got, {2, 3});
            for (size_t v = 0; v < 4; v++) {
                std::string key = BellIndex(static_cast<int>(v)).bits();
                double p = dist.count(key) ? dist.at(key) : 0.0;
                point_mass = std::max(point_mass, std::abs(p - (v == bits ? 1.0 : 0.0)));
            }
        }
        out.push_back(finish("T_gp subspace action", kExactTolerance, dev));
        out.push_back(finish("deterministic identification", kExactTolerance, point_mass));
    }
    {
        double dev = 0;
        double mismatches = 0;
        for (auto i : BellIndex::all()) {
            for (uint64_t s = 0; s < kNondisturbanceSeeds; s++) {
                IdentificationResult id = identify(bell_state(i), seed + s, circuits.tgp);
                if (id.index != i) {
                    mismatches++;
                }
                dev = std::max(dev, 1 - fidelity_pure(id.residual_state, bell_state(i)));
                dev = std::max(dev, 1 - id.probability);
            }
        }
        out.push_back(finish("nondisturbance", kExactTolerance, mismatches > 0 ? 1.0 : dev,
                             std::to_string(kNondisturbanceSeeds) + " seeds per Bell state"));
    }
    {
        double dev = std::max(unitarity_deviation(circuit_unitary(circuits.tgp)),
                              unitarity_deviation(circuit_unitary(circuits.cloner)));
        out.push_back(finish("T_gp and cloner unitarity", kComposedTolerance, dev));
    }
    {
        double joint = 0;
        double fid = 0;
        double margin = std::numeric_limits<double>::infinity();
        for (auto i : BellIndex::all()) {
            StateVector b = bell_state(i);
            joint = std::max(joint, apply_circuit(bell_with_ancillas(i, 0), circuits.cloner).max_abs_diff(tensor(b, b)));
            CloneReport rep = clone(b, circuits.cloner);
            fid = std::max({fid, std::abs(1 - rep.fidelity_original), std::abs(1 - rep.fidelity_clone)});
            margin = std::min(margin, rep.fidelity_clone - rep.ucm_reference);
        }
        out.push_back(finish("exact cloning", kExactTolerance, joint));
        out.push_back(finish("Bell clone fidelity", kExactTolerance, fid));
        char note[96];
        std::snprintf(note, sizeof(note), "min clone fidelity exceeds 5/6 by %.17g", margin);
        out.push_back(CheckResult{"beats universal cloner", 0, margin > 0 ? 0.0 : -margin, margin > 0, note});
    }
    {
        double dev = 0;
        double max_fidelity = 0;
        for (size_t k = 1; k <= kThetaGridPoints; k++) {
            double theta = std::numbers::pi / 2 * static_cast<double>(k) / (kThetaGridPoints + 1);
            std::vector<Amplitude> amps(4);
            for (size_t j = 0; j < 4; j++) {
                amps[j] = std::cos(theta) * bell_state(BellIndex(0))[j] + std::sin(theta) * bell_state(BellIndex(1))[j];
            }
            CloneReport rep = clone(StateVector::normalized(2, amps), circuits.cloner);
            double expected = std::pow(std::cos(theta), 4) + std::pow(std::sin(theta), 4);
            dev = std::max({dev, std::abs(rep.fidelity_original - expected), std::abs(rep.fidelity_clone - expected)});
            max_fidelity = std::max({max_fidelity, rep.fidelity_original, rep.fidelity_clone});
        }
        bool strict = max_fidelity < 1 - kComposedTolerance;
        char note[96];
        std::snprintf(note, sizeof(note), "%zu angles, max fidelity %.6f", kThetaGridPoints, max_fidelity);
        out.push_back(CheckResult{"no-cloning consistency", kComposedTolerance, dev, dev <= kComposedTolerance && strict,
                                  note});
    }
    return out;
}

}  // namespace bellclone
