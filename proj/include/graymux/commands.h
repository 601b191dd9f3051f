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

#ifndef GRAYMUX_COMMANDS_H
#define GRAYMUX_COMMANDS_H

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "graymux/angle_transform.h"
#include "graymux/synth.h"

namespace graymux {

/// Process exit codes shared by all subcommands.
enum ExitCode : int {
    kExitOk = 0,
    kExitVerifyFailed = 1,
    kExitUsage = 2,
};

enum class SynthOrder { lazy, natural };

struct SynthOptions {
    std::string angles_path;
    SynthOrder order = SynthOrder::lazy;
    bool cancel = true;
    std::optional<std::string> out_path;
};

struct VerifyOptions {
    std::string angles_path;
    std::string circuit_path;
    double tol = 1e-10;
};

/// Number of random basis states checked when the circuit is too wide for a
/// dense comparison.
constexpr int kSpotCheckStates = 32;
constexpr uint64_t kSpotCheckSeed = 0x9e3779b97f4a7c15ULL;

/// Builds the circuit for control angles `phis`:
///   lazy + cancel      -> emit_optimized
///   lazy, no cancel    -> emit_naive over the lazy code order
///   natural            -> emit_naive over ascending words, then
///                         cancel_adjacent if `cancel` is set
Circuit synthesize(const AngleVector &phis, SynthOrder order, bool cancel);

/// Largest deviation between the circuit and the multiplexed rotation for
/// `phis`. Dense comparison up to kMaxDenseBits, otherwise a seeded spot
/// check over kSpotCheckStates basis states.
double verification_error(const AngleVector &phis, const Circuit &circuit);

int cmd_gray(int m, std::ostream &out, std::ostream &err);
int cmd_synth(const SynthOptions &options, std::ostream &out, std::ostream &log);
int cmd_verify(const VerifyOptions &options, std::ostream &out, std::ostream &err);

/// Parses argv and dispatches to a subcommand.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace graymux

#endif
