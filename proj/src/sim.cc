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

#include "graymux/sim.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "graymux/errors.h"

namespace graymux {

namespace {

void check_dense_bits(unsigned nb) {
    if (nb > kMaxDenseBits) {
        throw ResourceLimitError(
            "dense matrices are limited to " + std::to_string(kMaxDenseBits) + " bits, got " + std::to_string(nb));
    }
}

void check_state_bits(unsigned nb) {
    if (nb > kMaxStateBits) {
        throw ResourceLimitError(
            "state vectors are limited to " + std::to_string(kMaxStateBits) + " bits, got " + std::to_string(nb));
    }
}

// Rotates the pair of rows (lo, hi) by the RotY block, where each row is
// `row_len` contiguous entries.
void rotate_rows(Complex *lo, Complex *hi, size_t row_len, double cos_a, double sin_a) {
    for (size_t k = 0; k < row_len; k++) {
        Complex a = lo[k];
        Complex b = hi[k];
        lo[k] = cos_a * a + sin_a * b;
        hi[k] = -sin_a * a + cos_a * b;
    }
}

// Left-multiplies a (dim x row_len) row-major block by the gate.
void apply_gate_rows(const Gate &gate, std::span<Complex> data, size_t row_len) {
    const size_t dim = data.size() / row_len;
    if (const auto *rot = std::get_if<RotY>(&gate)) {
        const size_t stride = size_t{1} << rot->target;
        const double c = std::cos(rot->angle);
        const double s = std::sin(rot->angle);
        for (size_t base = 0; base < dim; base += 2 * stride) {
            for (size_t x = base; x < base + stride; x++) {
                rotate_rows(&data[x * row_len], &data[(x + stride) * row_len], row_len, c, s);
            }
        }
    } else {
        const auto &cnot = std::get<CNot>(gate);
        const size_t control_mask = size_t{1} << cnot.control;
        const size_t target_mask = size_t{1} << cnot.target;
        for (size_t x = 0; x < dim; x++) {
            if ((x & control_mask) && !(x & target_mask)) {
                std::swap_ranges(
                    data.begin() + x * row_len,
                    data.begin() + (x + 1) * row_len,
                    data.begin() + (x | target_mask) * row_len);
            }
        }
    }
}

void check_gate_fits(const Gate &gate, unsigned nb) {
    // Circuit's constructor carries the position checks.
    (void)Circuit(nb, {gate});
}

}  // namespace

DenseUnitary::DenseUnitary(unsigned nb) : num_bits_(nb), dim_(size_t{1} << nb), entries_(dim_ * dim_) {
}

DenseUnitary DenseUnitary::identity(unsigned nb) {
    check_dense_bits(nb);
    DenseUnitary u(nb);
    for (size_t k = 0; k < u.dim_; k++) {
        u(k, k) = 1;
    }
    return u;
}

DenseUnitary DenseUnitary::operator*(const DenseUnitary &rhs) const {
    if (dim_ != rhs.dim_) {
        throw std::invalid_argument("matrix dimension mismatch");
    }
    DenseUnitary out(num_bits_);
    for (size_t r = 0; r < dim_; r++) {
        for (size_t k = 0; k < dim_; k++) {
            Complex a = (*this)(r, k);
            if (a == Complex{}) {
                continue;
            }
            for (size_t c = 0; c < dim_; c++) {
                out(r, c) += a * rhs(k, c);
            }
        }
    }
    return out;
}

DenseUnitary DenseUnitary::adjoint() const {
    DenseUnitary out(num_bits_);
    for (size_t r = 0; r < dim_; r++) {
        for (size_t c = 0; c < dim_; c++) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

bool DenseUnitary::is_unitary(double tol) const {
    return max_abs_diff(*this * adjoint(), identity(num_bits_)) <= tol;
}

double DenseUnitary::max_abs_imag() const {
    double worst = 0;
    for (const Complex &z : entries_) {
        worst = std::max(worst, std::abs(z.imag()));
    }
    return worst;
}

StateVector::StateVector(unsigned nb, std::vector<Complex> amplitudes)
    : num_bits_(nb), amplitudes_(std::move(amplitudes)) {
    check_state_bits(nb);
    if (amplitudes_.size() != size_t{1} << nb) {
        throw std::invalid_argument(
            "state vector on " + std::to_string(nb) + " bits needs " + std::to_string(size_t{1} << nb) +
            " amplitudes, got " + std::to_string(amplitudes_.size()));
    }
    for (const Complex &z : amplitudes_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw std::invalid_argument("state vector amplitudes must be finite");
        }
    }
}

StateVector StateVector::basis(unsigned nb, uint64_t index) {
    check_state_bits(nb);
    if (index >= uint64_t{1} << nb) {
        throw std::invalid_argument("basis index out of range");
    }
    std::vector<Complex> amps(size_t{1} << nb);
    amps[index] = 1;
    return StateVector(nb, std::move(amps));
}

DenseUnitary gate_matrix(const Gate &gate, unsigned nb) {
    check_gate_fits(gate, nb);
    DenseUnitary u = DenseUnitary::identity(nb);
    const size_t dim = u.dim();
    if (const auto *rot = std::get_if<RotY>(&gate)) {
        const size_t mask = size_t{1} << rot->target;
        const double c = std::cos(rot->angle);
        const double s = std::sin(rot->angle);
        // Block [[c, s], [-s, c]] indexed by (output bit, input bit).
        const double block[2][2] = {{c, s}, {-s, c}};
        for (size_t col = 0; col < dim; col++) {
            const size_t in_bit = (col & mask) ? 1 : 0;
            const size_t rest = col & ~mask;
            u(col, col) = 0;
            u(rest, col) = block[0][in_bit];
            u(rest | mask, col) = block[1][in_bit];
        }
    } else {
        const auto &cnot = std::get<CNot>(gate);
        for (size_t col = 0; col < dim; col++) {
            size_t row = (col >> cnot.control) & 1 ? col ^ (size_t{1} << cnot.target) : col;
            u(col, col) = 0;
            u(row, col) = 1;
        }
    }
    return u;
}

DenseUnitary circuit_matrix(const Circuit &circuit) {
    DenseUnitary u = DenseUnitary::identity(circuit.num_bits());
    std::span<Complex> rows(&u(0, 0), u.dim() * u.dim());
    for (const Gate &gate : circuit.gates()) {
        apply_gate_rows(gate, rows, u.dim());
    }
    return u;
}

DenseUnitary target_d_matrix(const AngleVector &phis, unsigned nb) {
    if (phis.basis() != AngleBasis::control) {
        throw std::invalid_argument("target_d_matrix expects control angles");
    }
    if (nb == 0 || phis.width() != nb - 1) {
        throw std::invalid_argument(
            "target_d_matrix: angle width " + std::to_string(phis.width()) + " does not match " +
            std::to_string(nb) + " bits");
    }
    DenseUnitary u = DenseUnitary::identity(nb);
    const size_t half = size_t{1} << phis.width();
    for (size_t c = 0; c < half; c++) {
        const double cos_a = std::cos(phis[c]);
        const double sin_a = std::sin(phis[c]);
        u(c, c) = cos_a;
        u(c, c + half) = sin_a;
        u(c + half, c) = -sin_a;
        u(c + half, c + half) = cos_a;
    }
    return u;
}

StateVector apply_circuit(const Circuit &circuit, StateVector state) {
    if (circuit.num_bits() != state.num_bits()) {
        throw std::invalid_argument(
            "circuit on " + std::to_string(circuit.num_bits()) + " bits applied to a state on " +
            std::to_string(state.num_bits()) + " bits");
    }
    for (const Gate &gate : circuit.gates()) {
        apply_gate_rows(gate, state.amplitudes(), 1);
    }
    return state;
}

StateVector apply_target_d(const AngleVector &phis, StateVector state) {
    if (phis.basis() != AngleBasis::control) {
        throw std::invalid_argument("apply_target_d expects control angles");
    }
    if (phis.width() + 1 != state.num_bits()) {
        throw std::invalid_argument("apply_target_d: angle width does not match state width");
    }
    const size_t half = size_t{1} << phis.width();
    auto amps = state.amplitudes();
    for (size_t c = 0; c < half; c++) {
        rotate_rows(&amps[c], &amps[c + half], 1, std::cos(phis[c]), std::sin(phis[c]));
    }
    return state;
}

double commutator_norm(const DenseUnitary &a, const DenseUnitary &b) {
    return max_abs_diff(a * b, b * a);
}

double max_abs_diff(const DenseUnitary &a, const DenseUnitary &b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("matrix dimension mismatch");
    }
    double worst = 0;
    for (size_t r = 0; r < a.dim(); r++) {
        for (size_t c = 0; c < a.dim(); c++) {
            worst = std::max(worst, std::abs(a(r, c) - b(r, c)));
        }
    }
    return worst;
}

double max_abs_diff(const StateVector &a, const StateVector &b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("state dimension mismatch");
    }
    double worst = 0;
    for (size_t k = 0; k < a.dim(); k++) {
        worst = std::max(worst, std::abs(a[k] - b[k]));
    }
    return worst;
}

}  // namespace graymux
