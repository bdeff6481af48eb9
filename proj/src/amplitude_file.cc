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

#include "bellclone/amplitude_file.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace bellclone {

namespace {

std::vector<std::string> split_tokens(const std::string &line) {
    std::istringstream ss(line);
    std::vector<std::string> tokens;
    std::string t;
    while (ss >> t) {
        tokens.push_back(t);
    }
    return tokens;
}

double parse_real(const std::string &token, size_t line) {
    double v = 0;
    const char *begin = token.data();
    const char *end = begin + token.size();
    if (!token.empty() && *begin == '+') {
        begin++;
    }
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || ptr != end || !std::isfinite(v)) {
        throw AmplitudeParseError(line, "'" + token + "' is not a finite number");
    }
    return v;
}

}  // namespace

AmplitudeParseError::AmplitudeParseError(size_t line, const std::string &what)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : "end of input: " + what), line_(line) {
}

AmplitudeTable read_amplitudes(std::istream &in) {
    AmplitudeTable table{0, {}};
    bool have_header = false;
    size_t expected = 0;
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        auto tokens = split_tokens(line);
        if (tokens.empty() || tokens[0].front() == '#') {
            continue;
        }
        if (!have_header) {
            if (tokens.size() != 2 || tokens[0] != "qubits") {
                throw AmplitudeParseError(line_no, "expected header 'qubits N'");
            }
            unsigned long long n = 0;
            const auto &t = tokens[1];
            auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), n);
            if (ec != std::errc() || ptr != t.data() + t.size() || n == 0) {
                throw AmplitudeParseError(line_no, "qubit count must be a positive integer, got '" + t + "'");
            }
            if (n > kMaxFileQubits) {
                throw AmplitudeParseError(line_no, "qubit count " + t + " exceeds limit of " +
                                                       std::to_string(kMaxFileQubits));
            }
            table.num_qubits = static_cast<size_t>(n);
            expected = size_t{1} << table.num_qubits;
            table.amps.reserve(expected);
            have_header = true;
            continue;
        }
        if (tokens.size() != 2) {
            throw AmplitudeParseError(line_no, "expected 're im', got " + std::to_string(tokens.size()) + " tokens");
        }
        if (table.amps.size() == expected) {
            throw AmplitudeParseError(line_no, "more than " + std::to_string(expected) + " amplitude lines");
        }
        table.amps.emplace_back(parse_real(tokens[0], line_no), parse_real(tokens[1], line_no));
    }
    if (!have_header) {
        throw AmplitudeParseError(0, "missing 'qubits N' header");
    }
    if (table.amps.size() != expected) {
        throw AmplitudeParseError(0, "expected " + std::to_string(expected) + " amplitude lines, found " +
                                         std::to_string(table.amps.size()));
    }
    return table;
}

StateVector to_state(const AmplitudeTable &table, size_t expected_qubits, double norm_slack) {
    if (expected_qubits != 0 && table.num_qubits != expected_qubits) {
        throw AmplitudeValidationError("expected a " + std::to_string(expected_qubits) + "-qubit state, file has " +
                                       std::to_string(table.num_qubits));
    }
    double n = norm_of(table.amps);
    if (!(std::abs(n - 1) <= norm_slack)) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.17g", n);
        throw AmplitudeValidationError("state norm " + std::string(buf) + " is not within " +
                                       std::to_string(norm_slack) + " of 1");
    }
    return StateVector::normalized(table.num_qubits, table.amps);
}

void write_amplitudes(std::ostream &out, const StateVector &state) {
    out << "qubits " << state.num_qubits() << "\n";
    char buf[96];
    for (const auto &a : state.amplitudes()) {
        std::snprintf(buf, sizeof(buf), "%.17g %.17g\n", a.real(), a.imag());
        out << buf;
    }
}

}  // namespace bellclone
