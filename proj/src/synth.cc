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

#include "graymux/synth.h"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "graymux/errors.h"

namespace graymux {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_subscript(const AngleVector &thetas) {
    if (thetas.basis() != AngleBasis::subscript) {
        throw std::invalid_argument("circuit emission expects subscript angles");
    }
}

}  // namespace

std::string gate_str(const Gate &gate) {
    return std::visit(
        overloaded{
            [](const RotY &g) { return "RotY(" + std::to_string(g.angle) + ", " + std::to_string(g.target) + ")"; },
            [](const CNot &g) { return "CNot(" + std::to_string(g.control) + "->" + std::to_string(g.target) + ")"; },
        },
        gate);
}

Circuit::Circuit(unsigned num_bits, std::vector<Gate> gates) : num_bits_(num_bits), gates_(std::move(gates)) {
    for (const Gate &gate : gates_) {
        std::visit(
            overloaded{
                [&](const RotY &g) {
                    if (g.target >= num_bits_) {
                        throw std::invalid_argument("RotY target out of range: " + gate_str(gate));
                    }
                },
                [&](const CNot &g) {
                    if (g.control >= num_bits_ || g.target >= num_bits_) {
                        throw std::invalid_argument("CNot position out of range: " + gate_str(gate));
                    }
                    if (g.control == g.target) {
                        throw std::invalid_argument("CNot control equals target: " + gate_str(gate));
                    }
                },
            },
            gate);
    }
}

GateCounts gate_counts(const Circuit &circuit) {
    GateCounts counts;
    for (const Gate &gate : circuit.gates()) {
        if (std::holds_alternative<RotY>(gate)) {
            counts.rotations++;
        } else {
            counts.cnots++;
        }
    }
    return counts;
}

std::vector<BitWord> lazy_codes(unsigned m) {
    if (m == 0) {
        return {BitWord(0, 0)};
    }
    return lazy_ordering(m).codes;
}

Circuit emit_term(const BitWord &word, double theta, unsigned nb) {
    if (nb == 0 || word.width() != nb - 1) {
        throw std::invalid_argument(
            "emit_term: word width " + std::to_string(word.width()) + " does not match " +
            std::to_string(nb) + " bits");
    }
    const unsigned target = nb - 1;
    std::vector<Gate> gates;
    for (unsigned k = 0; k < word.width(); k++) {
        if (word.bit(k)) {
            gates.push_back(CNot{k, target});
        }
    }
    const size_t num_cnots = gates.size();
    gates.push_back(RotY{target, theta});
    gates.reserve(2 * num_cnots + 1);
    for (size_t i = num_cnots; i-- > 0;) {
        gates.push_back(gates[i]);
    }
    return Circuit(nb, std::move(gates));
}

Circuit emit_naive(const AngleVector &thetas, std::span<const BitWord> order) {
    require_subscript(thetas);
    if (!is_permutation_of_words(order, thetas.width())) {
        throw std::invalid_argument("emit_naive: order is not a permutation of all words of the angle width");
    }
    const unsigned nb = thetas.width() + 1;
    std::vector<Gate> gates;
    for (const BitWord &word : order) {
        Circuit term = emit_term(word, thetas[word.value()], nb);
        gates.insert(gates.end(), term.gates().begin(), term.gates().end());
    }
    return Circuit(nb, std::move(gates));
}

Circuit emit_optimized(const AngleVector &thetas) {
    require_subscript(thetas);
    const unsigned m = thetas.width();
    const unsigned target = m;
    if (m == 0) {
        return Circuit(1, {RotY{0, thetas[0]}});
    }
    LazyOrdering ordering = lazy_ordering(m);
    std::vector<Gate> gates;
    gates.reserve(2 * ordering.codes.size());
    gates.push_back(RotY{target, thetas[ordering.codes[0].value()]});
    for (size_t j = 1; j < ordering.codes.size(); j++) {
        gates.push_back(CNot{ordering.flips[j - 1], target});
        gates.push_back(RotY{target, thetas[ordering.codes[j].value()]});
    }
    // The last code has exactly one set bit; its closing conjugation survives.
    const BitWord &last = ordering.codes.back();
    unsigned closing = 0;
    while (!last.bit(closing)) {
        closing++;
    }
    gates.push_back(CNot{closing, target});
    return Circuit(m + 1, std::move(gates));
}

Circuit cancel_adjacent(const Circuit &circuit) {
    std::optional<unsigned> target;
    auto check_target = [&](unsigned t) {
        if (!target) {
            target = t;
        } else if (*target != t) {
            throw UnsupportedShapeError("cancel_adjacent: all gates must share a single target bit");
        }
    };
    for (const Gate &gate : circuit.gates()) {
        std::visit([&](const auto &g) { check_target(g.target); }, gate);
    }

    std::vector<Gate> out;
    out.reserve(circuit.size());
    // Parity of each control within the current run of CNots.
    std::vector<bool> odd(circuit.num_bits(), false);
    bool in_run = false;
    auto flush = [&]() {
        if (!in_run) {
            return;
        }
        for (unsigned c = 0; c < odd.size(); c++) {
            if (odd[c]) {
                out.push_back(CNot{c, *target});
                odd[c] = false;
            }
        }
        in_run = false;
    };
    for (const Gate &gate : circuit.gates()) {
        if (const auto *cnot = std::get_if<CNot>(&gate)) {
            odd[cnot->control] = !odd[cnot->control];
            in_run = true;
        } else {
            flush();
            out.push_back(gate);
        }
    }
    flush();
    return Circuit(circuit.num_bits(), std::move(out));
}

}  // namespace graymux
