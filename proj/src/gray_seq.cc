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

#include "graymux/gray_seq.h"

#include <bit>
#include <stdexcept>

namespace graymux {

namespace {

constexpr unsigned kMaxBitWordWidth = 63;

void check_gray_width(unsigned m) {
    if (m < 1 || m > kMaxGrayWidth) {
        throw std::invalid_argument(
            "lazy ordering width must be in [1, " + std::to_string(kMaxGrayWidth) + "], got " +
            std::to_string(m));
    }
}

}  // namespace

BitWord::BitWord(uint64_t value, unsigned width) : value_(value), width_(width) {
    if (width > kMaxBitWordWidth) {
        throw std::invalid_argument("BitWord width " + std::to_string(width) + " is too large");
    }
    if (value >> width != 0) {
        throw std::invalid_argument(
            "BitWord value " + std::to_string(value) + " does not fit in width " + std::to_string(width));
    }
}

BitWord BitWord::parse(std::string_view text) {
    if (text.size() > kMaxBitWordWidth) {
        throw std::invalid_argument("BitWord text is too long");
    }
    uint64_t value = 0;
    for (char c : text) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("BitWord text must contain only '0' and '1'");
        }
        value = (value << 1) | static_cast<uint64_t>(c - '0');
    }
    return BitWord(value, static_cast<unsigned>(text.size()));
}

unsigned BitWord::popcount() const {
    return static_cast<unsigned>(std::popcount(value_));
}

std::string BitWord::str() const {
    std::string out(width_, '0');
    for (unsigned k = 0; k < width_; k++) {
        if (bit(k)) {
            out[width_ - 1 - k] = '1';
        }
    }
    return out;
}

std::vector<unsigned> flip_sequence_by_tree(unsigned m) {
    check_gray_width(m);

    // Full binary tree with m rows in heap order. Node i sits at depth
    // floor(log2(i + 1)) and that depth is its label.
    const size_t num_nodes = (size_t{1} << m) - 1;
    std::vector<uint8_t> labels(num_nodes);
    for (size_t i = 0; i < num_nodes; i++) {
        labels[i] = static_cast<uint8_t>(std::bit_width(i + 1) - 1);
    }

    std::vector<unsigned> out;
    out.reserve(num_nodes);
    std::vector<size_t> stack;
    stack.reserve(m);
    size_t node = 0;
    bool has_node = true;
    while (has_node || !stack.empty()) {
        while (has_node) {
            stack.push_back(node);
            size_t left = 2 * node + 1;
            has_node = left < num_nodes;
            node = left;
        }
        node = stack.back();
        stack.pop_back();
        out.push_back(labels[node]);
        size_t right = 2 * node + 2;
        has_node = right < num_nodes;
        node = right;
    }
    return out;
}

std::vector<unsigned> flip_sequence_closed_form(unsigned m) {
    check_gray_width(m);
    const uint64_t n = uint64_t{1} << m;
    std::vector<unsigned> out;
    out.reserve(n - 1);
    for (uint64_t j = 1; j < n; j++) {
        out.push_back(m - 1 - static_cast<unsigned>(std::countr_zero(j)));
    }
    return out;
}

LazyOrdering lazy_ordering(unsigned m) {
    LazyOrdering result;
    result.width = m;
    result.flips = flip_sequence_closed_form(m);
    result.codes.reserve(result.flips.size() + 1);
    uint64_t current = 0;
    result.codes.emplace_back(current, m);
    for (unsigned f : result.flips) {
        current ^= uint64_t{1} << f;
        result.codes.emplace_back(current, m);
    }
    return result;
}

bool is_permutation_of_words(std::span<const BitWord> order, unsigned width) {
    if (width > kMaxBitWordWidth || width >= 8 * sizeof(size_t)) {
        return false;
    }
    const size_t n = size_t{1} << width;
    if (order.size() != n) {
        return false;
    }
    std::vector<bool> seen(n, false);
    for (const BitWord &w : order) {
        if (w.width() != width || seen[w.value()]) {
            return false;
        }
        seen[w.value()] = true;
    }
    return true;
}

bool validate_lazy(const LazyOrdering &ordering) {
    const auto &codes = ordering.codes;
    if (ordering.width < 1 || !is_permutation_of_words(codes, ordering.width)) {
        return false;
    }
    if (codes.front().value() != 0 || codes.back().popcount() != 1) {
        return false;
    }
    const bool check_flips = !ordering.flips.empty();
    if (check_flips && ordering.flips.size() + 1 != codes.size()) {
        return false;
    }
    for (size_t j = 1; j < codes.size(); j++) {
        uint64_t diff = codes[j].value() ^ codes[j - 1].value();
        if (std::popcount(diff) != 1) {
            return false;
        }
        if (check_flips &&
            (ordering.flips[j - 1] >= ordering.width || diff != uint64_t{1} << ordering.flips[j - 1])) {
            return false;
        }
    }
    return true;
}

}  // namespace graymux
