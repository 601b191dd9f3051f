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

#ifndef GRAYMUX_SIM_H
#define GRAYMUX_SIM_H

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "graymux/angle_transform.h"
#include "graymux/synth.h"

namespace graymux {

using Complex = std::complex<double>;

/// Dense matrix guard: dimension at most 2^10.
constexpr unsigned kMaxDenseBits = 10;
/// State-vector guard: dimension at most 2^24.
constexpr unsigned kMaxStateBits = 24;

/// A 2^nb x 2^nb complex matrix indexed by basis-state integers. Basis state
/// x has bit k equal to the coefficient of 2^k.
class DenseUnitary {
   public:
    /// The identity on nb bits. Throws ResourceLimitError if nb > kMaxDenseBits.
    static DenseUnitary identity(unsigned nb);

    unsigned num_bits() const { return num_bits_; }
    size_t dim() const { return dim_; }

    Complex &operator()(size_t row, size_t col) { return entries_[row * dim_ + col]; }
    const Complex &operator()(size_t row, size_t col) const { return entries_[row * dim_ + col]; }

    DenseUnitary operator*(const DenseUnitary &rhs) const;
    DenseUnitary adjoint() const;

    /// max |U U^dagger - I| <= tol.
    bool is_unitary(double tol) const;
    /// Largest |imag| over all entries.
    double max_abs_imag() const;

   private:
    explicit DenseUnitary(unsigned nb);

    unsigned num_bits_;
    size_t dim_;
    std::vector<Complex> entries_;
};

/// Amplitudes over 2^nb basis states. Normalization is not enforced.
class StateVector {
   public:
    StateVector(unsigned nb, std::vector<Complex> amplitudes);

    static StateVector basis(unsigned nb, uint64_t index);

    unsigned num_bits() const { return num_bits_; }
    size_t dim() const { return amplitudes_.size(); }
    std::span<Complex> amplitudes() { return amplitudes_; }
    std::span<const Complex> amplitudes() const { return amplitudes_; }
    Complex operator[](size_t i) const { return amplitudes_[i]; }

   private:
    unsigned num_bits_;
    std::vector<Complex> amplitudes_;
};

/// Embeds one gate in the 2^nb-dimensional space. RotY(a) is the block
/// [[cos a, sin a], [-sin a, cos a]] = exp(i a sigma_y) on its target bit.
DenseUnitary gate_matrix(const Gate &gate, unsigned nb);

/// Product of the gate matrices with gates()[0] as the rightmost factor.
/// Throws ResourceLimitError above kMaxDenseBits.
DenseUnitary circuit_matrix(const Circuit &circuit);

/// Multiplexed y-rotation: with t = nb-1 the top bit and c the remaining
/// control bits, R(phi_c) acts on the target bit for each control value c.
DenseUnitary target_d_matrix(const AngleVector &phis, unsigned nb);

/// Applies the gates in order with in-place stride sweeps.
StateVector apply_circuit(const Circuit &circuit, StateVector state);

/// Applies the multiplexed rotation of target_d_matrix directly to a state,
/// for widths where the dense matrix is out of reach.
StateVector apply_target_d(const AngleVector &phis, StateVector state);

/// max |AB - BA|.
double commutator_norm(const DenseUnitary &a, const DenseUnitary &b);

/// max |A - B|.
double max_abs_diff(const DenseUnitary &a, const DenseUnitary &b);
double max_abs_diff(const StateVector &a, const StateVector &b);

}  // namespace graymux

#endif
