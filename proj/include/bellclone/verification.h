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

#ifndef BELLCLONE_VERIFICATION_H
#define BELLCLONE_VERIFICATION_H

#include <cstdint>
#include <string>
#include <vector>

#include "bellclone/circuit.h"

namespace bellclone {

/// The circuits under test. Defaults to the library's own constructions;
/// tests substitute broken variants to confirm the checks can fail.
struct CircuitSet {
    Circuit encode;
    Circuit decode;
    Circuit tgp;
    Circuit cloner;

    static CircuitSet standard();
};

struct CheckResult {
    std::string name;
    double tolerance;
    /// Worst observed deviation, in the check's own unit (amplitude error,
    /// probability error, standard deviations, mismatch count).
    double max_deviation;
    bool passed;
    std::string note;
};

/// Runs every library invariant against `circuits`. Randomized checks draw
/// from generators seeded with `seed`.
std::vector<CheckResult> run_verification(const CircuitSet &circuits, uint64_t seed = 1);

bool all_passed(const std::vector<CheckResult> &results);

}  // namespace bellclone

#endif
