// Copyright 2026 The graymux Authors
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

#include "graymux/circuit_io.h"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace graymux {

namespace {

struct Line {
    size_t number;
    std::vector<std::string_view> tokens;
};

std::vector<std::string_view> split_ws(std::string_view text) {
    std::vector<std::string_view> out;
    size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
            i++;
        }
        size_t start = i;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) {
            i++;
        }
        if (i > start) {
            out.push_back(text.substr(start, i - start));
        }
    }
    return out;
}

// Reads the next line that is neither blank nor a '#' comment. The returned
// tokens view into `storage`.
std::optional<Line> next_content_line(std::istream &in, size_t &line_number, std::string &storage) {
    while (std::getline(in, storage)) {
        line_number++;
        if (!storage.empty() && storage.back() == '\r') {
            storage.pop_back();
        }
        auto tokens = split_ws(storage);
        if (tokens.empty() || tokens.front().front() == '#') {
            continue;
        }
        return Line{line_number, std::move(tokens)};
    }
    return std::nullopt;
}

[[noreturn]] void fail(size_t line_number, const std::string &message) {
    throw ParseError("line " + std::to_string(line_number) + ": " + message);
}

unsigned parse_unsigned(std::string_view text, size_t line_number, const char *what) {
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        fail(line_number, std::string("invalid ") + what + " '" + std::string(text) + "'");
    }
    return value;
}

double parse_real(std::string_view text, size_t line_number) {
    if (!text.empty() && text.front() == '+') {
        text.remove_prefix(1);
    }
    double value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        fail(line_number, "invalid real number '" + std::string(text) + "'");
    }
    if (!std::isfinite(value)) {
        fail(line_number, "angle must be finite, got '" + std::string(text) + "'");
    }
    return value;
}

std::ifstream open_for_reading(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open '" + path.string() + "'");
    }
    return in;
}

}  // namespace

std::string format_double(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    if (ec != std::errc()) {
        throw std::logic_error("to_chars failed");
    }
    return std::string(buf, ptr);
}

AngleVector parse_angles(std::istream &in) {
    size_t line_number = 0;
    std::string storage;
    auto header = next_content_line(in, line_number, storage);
    if (!header) {
        throw ParseError("angles file is empty");
    }
    if (header->tokens.size() != 2 || header->tokens[0] != "m") {
        fail(header->number, "expected 'm <integer>'");
    }
    unsigned m = parse_unsigned(header->tokens[1], header->number, "width");
    if (m > kMaxAnglesFileWidth) {
        fail(header->number,
             "width " + std::to_string(m) + " exceeds the limit of " + std::to_string(kMaxAnglesFileWidth));
    }
    const size_t expected = size_t{1} << m;
    std::vector<double> values;
    values.reserve(expected);
    while (auto line = next_content_line(in, line_number, storage)) {
        if (line->tokens.size() != 1) {
            fail(line->number, "expected a single angle value");
        }
        if (values.size() == expected) {
            fail(line->number, "more than 2^" + std::to_string(m) + " angle values");
        }
        values.push_back(parse_real(line->tokens[0], line->number));
    }
    if (values.size() != expected) {
        throw ParseError(
            "expected " + std::to_string(expected) + " angle values, found " + std::to_string(values.size()));
    }
    return AngleVector(m, AngleBasis::control, std::move(values));
}

AngleVector read_angles_file(const std::filesystem::path &path) {
    auto in = open_for_reading(path);
    return parse_angles(in);
}

std::string format_angles(const AngleVector &phis) {
    std::string out = "m " + std::to_string(phis.width()) + "\n";
    for (double v : phis.values()) {
        out += format_double(v);
        out += '\n';
    }
    return out;
}

Circuit parse_circuit(std::istream &in) {
    size_t line_number = 0;
    std::string storage;
    auto header = next_content_line(in, line_number, storage);
    if (!header) {
        throw ParseError("circuit file is empty");
    }
    if (header->tokens.size() != 2 || header->tokens[0] != "NB") {
        fail(header->number, "expected 'NB <integer>'");
    }
    unsigned nb = parse_unsigned(header->tokens[1], header->number, "bit count");
    if (nb == 0 || nb > 63) {
        fail(header->number, "bit count must be in [1, 63]");
    }

    std::vector<Gate> gates;
    while (auto line = next_content_line(in, line_number, storage)) {
        const auto &t = line->tokens;
        Gate gate;
        if (t.size() == 4 && t[0] == "ROTY" && t[2] == "AT") {
            gate = RotY{parse_unsigned(t[3], line->number, "bit index"), parse_real(t[1], line->number)};
        } else if (t.size() == 4 && t[0] == "CNOT" && t[2] == "->") {
            gate = CNot{parse_unsigned(t[1], line->number, "bit index"), parse_unsigned(t[3], line->number, "bit index")};
        } else {
            fail(line->number, "expected 'ROTY <angle> AT <t>' or 'CNOT <c> -> <t>'");
        }
        try {
            (void)Circuit(nb, {gate});
        } catch (const std::invalid_argument &e) {
            fail(line->number, e.what());
        }
        gates.push_back(gate);
    }
    return Circuit(nb, std::move(gates));
}

Circuit read_circuit_file(const std::filesystem::path &path) {
    auto in = open_for_reading(path);
    return parse_circuit(in);
}

std::string format_circuit(const Circuit &circuit) {
    std::ostringstream out;
    out << "NB " << circuit.num_bits() << "\n";
    out << "# gates in application order: the first gate line acts first on the state\n";
    for (const Gate &gate : circuit.gates()) {
        if (const auto *rot = std::get_if<RotY>(&gate)) {
            out << "ROTY " << format_double(rot->angle) << " AT " << rot->target << "\n";
        } else {
            const auto &cnot = std::get<CNot>(gate);
            out << "CNOT " << cnot.control << " -> " << cnot.target << "\n";
        }
    }
    return out.str();
}

}  // namespace graymux
