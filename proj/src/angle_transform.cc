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

#include "graymux/angle_transform.h"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace graymux {

namespace {

void require_basis(const AngleVector &v, AngleBasis expected, const char *op) {
    if (v.basis() != expected) {
        throw std::invalid_argument(
            std::string(op) + ": expected " +
            (expected == AngleBasis::control ? "control" : "subscript") + " angles");
    }
}

// Unnormalized Walsh-Hadamard transform: out[c] = sum_b (-1)^{popcount(b & c)} in[b].
void walsh_hadamard_in_place(std::vector<double> &data) {
    const size_t n = data.size();
    for (size_t half = 1; half < n; half <<= 1) {
        for (size_t base = 0; base < n; base += 2 * half) {
            for (size_t k = base; k < base + half; k++) {
                double a = data[k];
                double b = data[k + half];
                data[k] = a + b;
                data[k + half] = a - b;
            }
        }
    }
}

std::vector<double> walsh_hadamard_direct(std::span<const double> in) {
    const size_t n = in.size();
    std::vector<double> out(n, 0.0);
    for (size_t c = 0; c < n; c++) {
        double acc = 0;
        for (size_t b = 0; b < n; b++) {
            acc += (std::popcount(b & c) & 1) ? -in[b] : in[b];
        }
        out[c] = acc;
    }
    return out;
}

void scale(std::vector<double> &data, unsigned width) {
    const double factor = std::ldexp(1.0, -static_cast<int>(width));
    for (double &x : data) {
        x *= factor;
    }
}

}  // namespace

AngleVector::AngleVector(unsigned width, AngleBasis basis, std::vector<double> values)
    : width_(width), basis_(basis), values_(std::move(values)) {
    if (width > kMaxAngleWidth) {
        throw std::invalid_argument("angle vector width " + std::to_string(width) + " is too large");
    }
    if (values_.size() != size_t{1} << width) {
        throw std::invalid_argument(
            "angle vector of width " + std::to_string(width) + " needs " +
            std::to_string(size_t{1} << width) + " values, got " + std::to_string(values_.size()));
    }
    for (double x : values_) {
        if (!std::isfinite(x)) {
            throw std::invalid_argument("angle vector entries must be finite");
        }
    }
}

AngleVector AngleVector::zeros(unsigned width, AngleBasis basis) {
    if (width > kMaxAngleWidth) {
        throw std::invalid_argument("angle vector width " + std::to_string(width) + " is too large");
    }
    return AngleVector(width, basis, std::vector<double>(size_t{1} << width, 0.0));
}

AngleVector thetas_from_phis(const AngleVector &phis) {
    require_basis(phis, AngleBasis::control, "thetas_from_phis");
    std::vector<double> data(phis.values().begin(), phis.values().end());
    walsh_hadamard_in_place(data);
    scale(data, phis.width());
    return AngleVector(phis.width(), AngleBasis::subscript, std::move(data));
}

AngleVector phis_from_thetas(const AngleVector &thetas) {
    require_basis(thetas, AngleBasis::subscript, "phis_from_thetas");
    std::vector<double> data(thetas.values().begin(), thetas.values().end());
    walsh_hadamard_in_place(data);
    return AngleVector(thetas.width(), AngleBasis::control, std::move(data));
}

AngleVector thetas_from_phis_direct(const AngleVector &phis) {
    require_basis(phis, AngleBasis::control, "thetas_from_phis_direct");
    auto data = walsh_hadamard_direct(phis.values());
    scale(data, phis.width());
    return AngleVector(phis.width(), AngleBasis::subscript, std::move(data));
}

AngleVector phis_from_thetas_direct(const AngleVector &thetas) {
    require_basis(thetas, AngleBasis::subscript, "phis_from_thetas_direct");
    return AngleVector(thetas.width(), AngleBasis::control, walsh_hadamard_direct(thetas.values()));
}

}  // namespace graymux
