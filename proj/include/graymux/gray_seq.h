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

#ifndef GRAYMUX_GRAY_SEQ_H
#define GRAYMUX_GRAY_SEQ_H

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace graymux {

/// Largest width accepted by the lazy-ordering generators.
constexpr unsigned kMaxGrayWidth = 30;

/// An element of Bool^width. Bit k of `value` is the coefficient of 2^k, so
/// when printed the rightmost character is bit 0.
///
/// Width 0 is allowed and denotes the single empty word; the generators in
/// this header still require width >= 1.
class BitWord {
   public:
    BitWord() = default;
    BitWord(uint64_t value, unsigned width);

    /// Parses a word such as "110" (bit 0 is the rightmost character).
    static BitWord parse(std::string_view text);

    uint64_t value() const { return value_; }
    unsigned width() const { return width_; }
    bool bit(unsigned k) const { return (value_ >> k) & 1; }
    unsigned popcount() const;

    /// Zero-padded binary text, most significant bit first.
    std::string str() const;

    bool operator==(const BitWord &) const = default;

   private:
    uint64_t value_ = 0;
    unsigned width_ = 0;
};

/// A Gray-code ordering of Bool^width that starts at the zero word and ends
/// at a word with a single set bit.
///
/// `codes[j]` is obtained from `codes[j - 1]` by flipping bit `flips[j - 1]`.
/// In the 1-indexed notation s_1 ... s_{N-1} used for flip sequences,
/// s_j == flips[j - 1].
struct LazyOrdering {
    unsigned width = 0;
    std::vector<unsigned> flips;
    std::vector<BitWord> codes;
};

/// Inorder traversal of the full binary tree with rows at depths 0 ... m-1,
/// each node labeled by its depth. The tree is materialized in heap order
/// (children of node i at 2i+1 and 2i+2).
///
/// Throws std::invalid_argument unless 1 <= m <= kMaxGrayWidth.
std::vector<unsigned> flip_sequence_by_tree(unsigned m);

/// Same sequence via the ruler formula: element j (1-based) is m-1-v2(j),
/// where v2(j) is the exponent of 2 dividing j.
std::vector<unsigned> flip_sequence_closed_form(unsigned m);

/// Applies the flip sequence to the zero word of width m.
LazyOrdering lazy_ordering(unsigned m);

/// Checks that the codes start at zero, step by one bit flip, end on a unit
/// vector and enumerate every word of the width exactly once. When `flips`
/// is non-empty it must also agree with the steps between codes.
bool validate_lazy(const LazyOrdering &ordering);

/// True iff `order` lists every word of Bool^width exactly once and all
/// words carry that width.
bool is_permutation_of_words(std::span<const BitWord> order, unsigned width);

}  // namespace graymux

#endif
