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

#ifndef GRAYMUX_CIRCUIT_IO_H
#define GRAYMUX_CIRCUIT_IO_H

#include <filesystem>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "graymux/angle_transform.h"
#include "graymux/synth.h"

namespace graymux {

/// Largest m accepted in an angles file, so that the synthesized circuit
/// still fits the state-vector guard.
constexpr unsigned kMaxAnglesFileWidth = 23;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Angles file:
//
//     m <integer>
//     <phi_0>
//     ...
//     <phi_{2^m - 1}>
//
// One decimal value in radians per line. Blank lines and lines starting with
// '#' are ignored anywhere in the file.
AngleVector parse_angles(std::istream &in);
AngleVector read_angles_file(const std::filesystem::path &path);
std::string format_angles(const AngleVector &phis);

// Circuit file:
//
//     NB <integer>
//     ROTY <angle> AT <t>
//     CNOT <c> -> <t>
//
// Gates are listed in application order (first gate line acts first). Angles
// are written as the shortest decimal that reads back to the same double.
Circuit parse_circuit(std::istream &in);
Circuit read_circuit_file(const std::filesystem::path &path);
std::string format_circuit(const Circuit &circuit);

/// Shortest decimal text that round-trips `value`.
std::string format_double(double value);

}  // namespace graymux

#endif
