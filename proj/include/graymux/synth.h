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

#ifndef GRAYMUX_SYNTH_H
#define GRAYMUX_SYNTH_H

#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "graymux/angle_transform.h"
#include "graymux/gray_seq.h"

namespace graymux {

/// exp(i * angle * sigma_y) on bit `target`.
struct RotY {
    unsigned target = 0;
    double angle = 0;
    bool operator==(const RotY &) const = default;
};

/// Flips bit `target` when bit `control` is 1.
struct CNot {
    unsigned control = 0;
    unsigned target = 0;
    bool operator==(const CNot &) const = default;
};

using Gate = std::variant<RotY, CNot>;

std::string gate_str(const Gate &gate);

/// An ordered gate list over `num_bits` bits.
///
/// Gates are stored in application order: gates()[0] acts on the state first,
/// so as an operator product it is the RIGHTMOST factor. The circuit
/// [g0, g1, g2] implements the matrix G2 * G1 * G0.
class Circuit {
   public:
    explicit Circuit(unsigned num_bits, std::vector<Gate> gates = {});

    unsigned num_bits() const { return num_bits_; }
    const std::vector<Gate> &gates() const { return gates_; }
    size_t size() const { return gates_.size(); }

    bool operator==(const Circuit &) const = default;

   private:
    unsigned num_bits_;
    std::vector<Gate> gates_;
};

struct GateCounts {
    size_t rotations = 0;
    size_t cnots = 0;
    bool operator==(const GateCounts &) const = default;
};

GateCounts gate_counts(const Circuit &circuit);

/// Lazy code sequence for any m >= 0. For m == 0 this is the single empty word.
std::vector<BitWord> lazy_codes(unsigned m);

/// One CNOT-conjugated rotation term on nb bits with the rotation on bit nb-1:
/// CNots from every set bit of `word` (ascending), RotY(theta), then the same
/// CNots descending. Throws std::invalid_argument unless word.width() == nb-1.
Circuit emit_term(const BitWord &word, double theta, unsigned nb);

/// Concatenation of emit_term over `order` (order[0] first). `thetas` must be
/// subscript angles and `order` a permutation of Bool^thetas.width().
Circuit emit_naive(const AngleVector &thetas, std::span<const BitWord> order);

/// The lazy-ordered form with one CNot between consecutive rotations and a
/// single closing CNot: 2^m rotations and 2^m CNots for m >= 1, one rotation
/// for m == 0.
Circuit emit_optimized(const AngleVector &thetas);

/// Peephole pass for circuits whose rotations and CNots all share one target.
/// Each maximal run of CNots is reduced to the controls occurring an odd number
/// of times, emitted in ascending order. Rotations are left untouched.
///
/// Throws UnsupportedShapeError for any other shape.
Circuit cancel_adjacent(const Circuit &circuit);

}  // namespace graymux

#endif
