// Copyright 2026 The entdist Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Shared scalar types, tolerances and the library error type.
 */

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace entdist {

using cplx = std::complex<double>;
using Vec3 = Eigen::Vector3d;
using Mat2 = Eigen::Matrix2cd;

/// Raised for every contract violation (bad input, unsupported case).
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

namespace tol {
inline constexpr double kNorm = 1e-12;       // state normalization, Hermiticity
inline constexpr double kPsdSlack = 1e-10;   // eigenvalue positivity
inline constexpr double kUnitAxis = 1e-12;   // |v| = 1
inline constexpr double kDegenerate = 1e-9;  // |Bloch| below this is degenerate
inline constexpr double kLoadNorm = 1e-6;    // loader renormalization window
} // namespace tol

inline constexpr double kPi = 3.14159265358979323846;

[[nodiscard]] inline std::size_t dim_of(int num_qubits) {
    return std::size_t{1} << num_qubits;
}

} // namespace entdist
