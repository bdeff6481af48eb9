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

#ifndef BELLCLONE_CLI_H
#define BELLCLONE_CLI_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bellclone/bell.h"
#include "bellclone/cloner.h"

namespace bellclone::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Fidelity floor for `demo` to count as a success.
inline constexpr double kDemoFidelityFloor = 1 - 1e-9;

enum class Format { plain, json };

struct CommandOutput {
    int exit_code = kExitOk;
    std::string out;
    std::string err;
};

struct DemoReport {
    BellIndex hidden_index;
    BellIndex identified_index;
    std::string outcome_bits;
    double fidelity_original;
    double fidelity_clone;
    double ucm_reference;
    uint64_t seed;
};

/// Identifies and clones bell_state(hidden). With no hidden index one is
/// drawn from `seed`.
DemoReport run_demo(uint64_t seed, std::optional<BellIndex> hidden);

std::string render(const DemoReport &report, Format format);
std::string render(const CloneReport &report, Format format);

CommandOutput cmd_demo(uint64_t seed, std::optional<BellIndex> hidden, Format format);

/// Reads a 2-qubit amplitude file, accepting norms within 1e-6 of 1.
CommandOutput cmd_clone_file(const std::string &path, Format format);
CommandOutput cmd_clone_bell(BellIndex index, Format format);

CommandOutput cmd_verify(Format format);

/// `name` is one of encode, decode, tgp, clone.
CommandOutput cmd_matrix(const std::string &name, Format format);

/// Parses argv (argv[0] is the program name) and dispatches.
CommandOutput run(const std::vector<std::string> &args);

}  // namespace bellclone::cli

#endif
