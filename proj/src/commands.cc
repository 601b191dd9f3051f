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

#include "graymux/commands.h"

#include <fstream>
#include <random>

#include "CLI11.hpp"
#include "graymux/circuit_io.h"
#include "graymux/errors.h"
#include "graymux/gray_seq.h"
#include "graymux/sim.h"

namespace graymux {

Circuit synthesize(const AngleVector &phis, SynthOrder order, bool cancel) {
    AngleVector thetas = thetas_from_phis(phis);
    if (order == SynthOrder::lazy) {
        if (cancel) {
            return emit_optimized(thetas);
        }
        return emit_naive(thetas, lazy_codes(thetas.width()));
    }
    std::vector<BitWord> ascending;
    ascending.reserve(thetas.size());
    for (uint64_t v = 0; v < thetas.size(); v++) {
        ascending.emplace_back(v, thetas.width());
    }
    Circuit circuit = emit_naive(thetas, ascending);
    return cancel ? cancel_adjacent(circuit) : circuit;
}

double verification_error(const AngleVector &phis, const Circuit &circuit) {
    if (circuit.num_bits() != phis.width() + 1) {
        throw std::invalid_argument(
            "circuit has NB " + std::to_string(circuit.num_bits()) + " but the angles need NB " +
            std::to_string(phis.width() + 1));
    }
    const unsigned nb = circuit.num_bits();
    if (nb <= kMaxDenseBits) {
        return max_abs_diff(circuit_matrix(circuit), target_d_matrix(phis, nb));
    }
    if (nb > kMaxStateBits) {
        throw ResourceLimitError("circuit is wider than the state-vector limit");
    }
    std::mt19937_64 rng(kSpotCheckSeed);
    std::uniform_int_distribution<uint64_t> pick(0, (uint64_t{1} << nb) - 1);
    double worst = 0;
    for (int k = 0; k < kSpotCheckStates; k++) {
        StateVector basis = StateVector::basis(nb, pick(rng));
        worst = std::max(worst, max_abs_diff(apply_circuit(circuit, basis), apply_target_d(phis, basis)));
    }
    return worst;
}

int cmd_gray(int m, std::ostream &out, std::ostream &err) {
    if (m < 1 || m > static_cast<int>(kMaxGrayWidth)) {
        err << "error: -m must be in [1, " << kMaxGrayWidth << "], got " << m << "\n";
        return kExitUsage;
    }
    LazyOrdering ordering = lazy_ordering(static_cast<unsigned>(m));
    for (size_t j = 0; j < ordering.flips.size(); j++) {
        if (j) {
            out << ',';
        }
        out << ordering.flips[j];
    }
    out << '\n';
    for (const BitWord &code : ordering.codes) {
        out << code.str() << '\n';
    }
    return kExitOk;
}

int cmd_synth(const SynthOptions &options, std::ostream &out, std::ostream &log) {
    Circuit circuit(1);
    try {
        AngleVector phis = read_angles_file(options.angles_path);
        circuit = synthesize(phis, options.order, options.cancel);
    } catch (const std::exception &e) {
        log << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    const std::string text = format_circuit(circuit);
    if (options.out_path) {
        std::ofstream file(*options.out_path);
        file << text;
        if (!file) {
            log << "error: cannot write '" << *options.out_path << "'\n";
            return kExitUsage;
        }
    } else {
        out << text;
    }
    GateCounts counts = gate_counts(circuit);
    log << "rotations=" << counts.rotations << " cnots=" << counts.cnots << "\n";
    return kExitOk;
}

int cmd_verify(const VerifyOptions &options, std::ostream &out, std::ostream &err) {
    if (!(options.tol >= 0)) {
        err << "error: --tol must be a nonnegative number\n";
        return kExitUsage;
    }
    double diff = 0;
    try {
        AngleVector phis = read_angles_file(options.angles_path);
        Circuit circuit = read_circuit_file(options.circuit_path);
        diff = verification_error(phis, circuit);
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    out << "max_abs_diff=" << format_double(diff) << "\n";
    return diff <= options.tol ? kExitOk : kExitVerifyFailed;
}

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Multiplexed y-rotation synthesis with lazy (Gray-code) CNOT ordering", "graymux"};
    app.require_subcommand(1);

    int gray_m = 0;
    auto *gray = app.add_subcommand("gray", "Print the lazy ordering of Bool^m");
    gray->add_option("-m", gray_m, "Word width")->required();

    SynthOptions synth_options;
    bool no_cancel = false;
    auto *synth = app.add_subcommand("synth", "Synthesize a circuit from an angles file");
    synth->add_option("--angles", synth_options.angles_path, "Angles file (radians)")->required();
    synth->add_option("--order", synth_options.order, "Term order")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, SynthOrder>{{"lazy", SynthOrder::lazy}, {"natural", SynthOrder::natural}}));
    synth->add_flag("--no-cancel", no_cancel, "Skip CNOT cancellation");
    synth->add_option("--out", synth_options.out_path, "Output circuit file (default: stdout)");

    VerifyOptions verify_options;
    auto *verify = app.add_subcommand("verify", "Check a circuit against the rotation it should implement");
    verify->add_option("--angles", verify_options.angles_path, "Angles file (radians)")->required();
    verify->add_option("--circuit", verify_options.circuit_path, "Circuit file")->required();
    verify->add_option("--tol", verify_options.tol, "Maximum entrywise deviation");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (gray->parsed()) {
        return cmd_gray(gray_m, out, err);
    }
    if (synth->parsed()) {
        synth_options.cancel = !no_cancel;
        return cmd_synth(synth_options, out, err);
    }
    return cmd_verify(verify_options, out, err);
}

}  // namespace graymux
