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

#ifndef GRAYMUX_ERRORS_H
#define GRAYMUX_ERRORS_H

#include <stdexcept>

namespace graymux {

/// Raised when a gate list falls outside the single-target shape a pass supports.
struct UnsupportedShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Raised when a request exceeds a dense-matrix or state-vector size guard.
struct ResourceLimitError : std::length_error {
    using std::length_error::length_error;
};

}  // namespace graymux

#endif
