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

#include "bellclone/cli.h"

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <map>
#include <random>
#include <sstream>

#include "bellclone/amplitude_file.h"
#include "bellclone/dense.h"
#include "bellclone/measurement.h"
#include "bellclone/verification.h"

namespace bellclone::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr double kFileNormSlack = 1e-6;

std::string real_str(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string kv_lines(const std::vector<std::pair<std::string, std::string>> &rows) {
    std::string s;
    for (const auto &[k, v] : rows) {
        s += k + " = " + v + "\n";
    }
    return s;
}

Json amplitude_json(const StateVector &s) {
    Json arr = Json::array();
    for (const auto &a : s.amplitudes()) {
        arr.push_back({a.real(), a.imag()});
    }
    return arr;
}

std::string amplitude_plain(const StateVector &s) {
    std::string out;
    for (const auto &a : s.amplitudes()) {
        out += (out.empty() ? "(" : " (") + real_str(a.real()) + "," + real_str(a.imag()) + ")";
    }
    return out;
}

CommandOutput usage_error(const std::string &msg) {
    return CommandOutput{kExitUsage, "", "error: " + msg + "\n"};
}

}  // namespace

DemoReport run_demo(uint64_t seed, std::optional<BellIndex> hidden) {
    if (!hidden) {
        std::mt19937_64 rng(seed);
        hidden = BellIndex(static_cast<int>(unit_interval(rng()) * 4));
    }
    StateVector pair = bell_state(*hidden);
    IdentificationResult id = identify(pair, seed);
    CloneReport cl = clone(pair);
    return DemoReport{
        .hidden_index = *hidden,
        .identified_index = id.index,
        .outcome_bits = id.outcome_bits,
        .fidelity_original = cl.fidelity_original,
        .fidelity_clone = cl.fidelity_clone,
        .ucm_reference = cl.ucm_reference,
        .seed = seed,
    };
}

std::string render(const DemoReport &r, Format format) {
    if (format == Format::json) {
        Json j;
        j["hidden_index"] = r.hidden_index.value();
        j["identified_index"] = r.identified_index.value();
        j["outcome_bits"] = r.outcome_bits;
        j["fidelity_original"] = r.fidelity_original;
        j["fidelity_clone"] = r.fidelity_clone;
        j["ucm_reference"] = r.ucm_reference;
        j["seed"] = r.seed;
        return j.dump() + "\n";
    }
    return kv_lines({
        {"hidden_index", std::to_string(r.hidden_index.value())},
        {"identified_index", std::to_string(r.identified_index.value())},
        {"outcome_bits", r.outcome_bits},
        {"fidelity_original", real_str(r.fidelity_original)},
        {"fidelity_clone", real_str(r.fidelity_clone)},
        {"ucm_reference", real_str(r.ucm_reference)},
        {"seed", std::to_string(r.seed)},
    });
}

std::string render(const CloneReport &r, Format format) {
    if (format == Format::json) {
        Json j;
        if (r.input_index) {
            j["input_label"] = r.input_index->value();
        } else {
            j["input_label"] = r.input_label();
        }
        j["joint_state"] = amplitude_json(r.joint_state);
        j["fidelity_original"] = r.fidelity_original;
        j["fidelity_clone"] = r.fidelity_clone;
        j["ucm_reference"] = r.ucm_reference;
        return j.dump() + "\n";
    }
    return kv_lines({
        {"input_label", r.input_label()},
        {"joint_state", amplitude_plain(r.joint_state)},
        {"fidelity_original", real_str(r.fidelity_original)},
        {"fidelity_clone", real_str(r.fidelity_clone)},
        {"ucm_reference", real_str(r.ucm_reference)},
    });
}

CommandOutput cmd_demo(uint64_t seed, std::optional<BellIndex> hidden, Format format) {
    DemoReport r = run_demo(seed, hidden);
    bool ok = r.identified_index == r.hidden_index && r.fidelity_original >= kDemoFidelityFloor &&
              r.fidelity_clone >= kDemoFidelityFloor;
    return CommandOutput{ok ? kExitOk : kExitCheckFailed, render(r, format), ""};
}

CommandOutput cmd_clone_file(const std::string &path, Format format) {
    std::ifstream in(path);
    if (!in) {
        return usage_error("cannot open '" + path + "'");
    }
    try {
        StateVector pair = to_state(read_amplitudes(in), 2, kFileNormSlack);
        return CommandOutput{kExitOk, render(clone(pair), format), ""};
    } catch (const AmplitudeParseError &e) {
        return usage_error(path + ": parse error: " + e.what());
    } catch (const AmplitudeValidationError &e) {
        return usage_error(path + ": invalid state: " + e.what());
    }
}

CommandOutput cmd_clone_bell(BellIndex index, Format format) {
    return CommandOutput{kExitOk, render(clone(bell_state(index)), format), ""};
}

CommandOutput cmd_verify(Format format) {
    auto results = run_verification(CircuitSet::standard());
    size_t passed = 0;
    for (const auto &r : results) {
        passed += r.passed;
    }
    bool ok = passed == results.size();
    std::string text;
    if (format == Format::json) {
        Json checks = Json::array();
        for (const auto &r : results) {
            Json c;
            c["name"] = r.name;
            c["tolerance"] = r.tolerance;
            c["max_deviation"] = r.max_deviation;
            c["passed"] = r.passed;
            c["note"] = r.note;
            checks.push_back(std::move(c));
        }
        Json j;
        j["checks"] = std::move(checks);
        j["passed"] = passed;
        j["total"] = results.size();
        j["all_passed"] = ok;
        text = j.dump() + "\n";
    } else {
        char line[256];
        for (const auto &r : results) {
            std::snprintf(line, sizeof(line), "%s  %-38s tol=%-8.3g max_dev=%.3g", r.passed ? "PASS" : "FAIL",
                          r.name.c_str(), r.tolerance, r.max_deviation);
            text += line;
            if (!r.note.empty()) {
                text += "  (" + r.note + ")";
            }
            text += "\n";
        }
        text += std::to_string(passed) + "/" + std::to_string(results.size()) + " checks passed\n";
    }
    return CommandOutput{ok ? kExitOk : kExitCheckFailed, text, ""};
}

CommandOutput cmd_matrix(const std::string &name, Format format) {
    static const std::map<std::string, Circuit (*)()> circuits = {
        {"encode", bell_encode_circuit},
        {"decode", bell_decode_circuit},
        {"tgp", tgp_circuit},
        {"clone", clone_circuit},
    };
    auto it = circuits.find(name);
    if (it == circuits.end()) {
        return usage_error("unknown circuit '" + name + "' (expected encode, decode, tgp or clone)");
    }
    DenseMatrix u = circuit_unitary(it->second());
    std::string text;
    if (format == Format::json) {
        Json rows = Json::array();
        for (Eigen::Index i = 0; i < u.rows(); i++) {
            Json row = Json::array();
            for (Eigen::Index k = 0; k < u.cols(); k++) {
                row.push_back({u(i, k).real(), u(i, k).imag()});
            }
            rows.push_back(std::move(row));
        }
        Json j;
        j["name"] = name;
        j["dimension"] = u.rows();
        j["entries"] = std::move(rows);
        text = j.dump() + "\n";
    } else {
        text = "# " + name + " " + std::to_string(u.rows()) + "x" + std::to_string(u.cols()) +
               " row-major, one row per line, re im pairs\n";
        for (Eigen::Index i = 0; i < u.rows(); i++) {
            for (Eigen::Index k = 0; k < u.cols(); k++) {
                text += (k ? " " : "") + real_str(u(i, k).real()) + " " + real_str(u(i, k).imag());
            }
            text += "\n";
        }
    }
    return CommandOutput{kExitOk, text, ""};
}

CommandOutput run(const std::vector<std::string> &args) {
    CLI::App app{"Bell-state identification and cloning simulator", "bellclone"};
    app.require_subcommand(1);

    uint64_t seed = 0;
    std::optional<int> bell;
    std::string state_path;
    std::string format_name = "plain";
    const std::map<std::string, Format> formats = {{"plain", Format::plain}, {"json", Format::json}};

    auto add_format = [&](CLI::App *sub) {
        sub->add_option("--format", format_name, "Output format")->check(CLI::IsMember({"plain", "json"}));
    };

    auto *demo = app.add_subcommand("demo", "Identify and clone a hidden Bell state");
    demo->add_option("--seed", seed, "Random seed (default 0)");
    demo->add_option("--bell", bell, "Hidden Bell index 0..3 (drawn from the seed when absent)")
        ->check(CLI::Range(0, 3));
    add_format(demo);

    auto *clone_cmd = app.add_subcommand("clone", "Clone a 2-qubit state from an amplitude file or a Bell index");
    auto *state_opt = clone_cmd->add_option("--state", state_path, "Amplitude file");
    auto *bell_opt = clone_cmd->add_option("--bell", bell, "Bell index 0..3")->check(CLI::Range(0, 3));
    state_opt->excludes(bell_opt);
    add_format(clone_cmd);

    auto *verify = app.add_subcommand("verify", "Run every invariant check");
    add_format(verify);

    std::string matrix_name;
    auto *matrix = app.add_subcommand("matrix", "Print a circuit's dense unitary");
    matrix->add_option("name", matrix_name, "encode, decode, tgp or clone")->required();
    add_format(matrix);

    std::vector<std::string> rest(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
    try {
        app.parse(rest);
    } catch (const CLI::ParseError &e) {
        std::ostringstream out;
        std::ostringstream err;
        int code = app.exit(e, out, err);
        return CommandOutput{code == 0 ? kExitOk : kExitUsage, out.str(), err.str()};
    }

    const Format format = formats.at(format_name);
    auto bell_index = [&]() -> std::optional<BellIndex> {
        return bell ? std::optional<BellIndex>(BellIndex(*bell)) : std::nullopt;
    };
    if (demo->parsed()) {
        return cmd_demo(seed, bell_index(), format);
    }
    if (clone_cmd->parsed()) {
        if (!state_path.empty()) {
            return cmd_clone_file(state_path, format);
        }
        if (bell) {
            return cmd_clone_bell(BellIndex(*bell), format);
        }
        return usage_error("clone needs --state <path> or --bell <0..3>");
    }
    if (verify->parsed()) {
        return cmd_verify(format);
    }
    return cmd_matrix(matrix_name, format);
}

}  // namespace bellclone::cli
