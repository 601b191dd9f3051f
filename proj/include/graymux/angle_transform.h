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

#ifndef GRAYMUX_ANGLE_TRANSFORM_H
#define GRAYMUX_ANGLE_TRANSFORM_H

#include <span>
#include <vector>

namespace graymux {

/// Which side of the parity transform an AngleVector lives on.
///
/// Control angles phi_c are the rotation each control pattern c must receive.
/// Subscript angles theta_b parametrize the rotation inside the CNOT-conjugated
/// term for subscript word b. They are related by
///
///     phi_c   = sum_b (-1)^{popcount(b & c)} theta_b
///     theta_b = 2^-m sum_c (-1)^{popcount(b & c)} phi_c
enum class AngleBasis { control, subscript };

/// 2^width finite angles in radians. Entry i belongs to the BitWord with value i.
class AngleVector {
   public:
    AngleVector(unsigned width, AngleBasis basis, std::vector<double> values);

    static AngleVector zeros(unsigned width, AngleBasis basis);

    unsigned width() const { return width_; }
    AngleBasis basis() const { return basis_; }
    size_t size() const { return values_.size(); }
    std::span<const double> values() const { return values_; }
    double operator[](size_t i) const { return values_[i]; }

    bool operator==(const AngleVector &) const = default;

   private:
    unsigned width_;
    AngleBasis basis_;
    std::vector<double> values_;
};

/// Width guard for the transforms (the largest vector is 2^kMaxAngleWidth).
constexpr unsigned kMaxAngleWidth = 30;

/// theta_b = 2^-m sum_c (-1)^{b.c} phi_c, via an in-place butterfly.
/// Throws std::invalid_argument if `phis` is not in the control basis.
AngleVector thetas_from_phis(const AngleVector &phis);

/// phi_c = sum_b (-1)^{b.c} theta_b, via an in-place butterfly.
/// Throws std::invalid_argument if `thetas` is not in the subscript basis.
AngleVector phis_from_thetas(const AngleVector &thetas);

// O(4^m) direct sums. Reference implementations kept for cross-checking the
// butterfly; not meant for production widths.
AngleVector thetas_from_phis_direct(const AngleVector &phis);
AngleVector phis_from_thetas_direct(const AngleVector &thetas);

}  // namespace graymux

#endif
