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
 * Seeded samplers for states, frames, local unitaries and density matrices.
 */

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "entdist/qstate.hpp"

namespace entdist {

using Rng = std::mt19937_64;

/// Generator for sub-stream `stream` of `seed` (fixed splitting).
[[nodiscard]] Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0);

/// Haar-random pure state (normalized complex Gaussian vector).
[[nodiscard]] PureState random_state(int num_qubits, Rng &rng);

[[nodiscard]] Vec3 random_unit_vector(Rng &rng);

[[nodiscard]] std::vector<Vec3> random_frame(int num_qubits, Rng &rng);

[[nodiscard]] Mat2 haar_unitary_2(Rng &rng);

[[nodiscard]] std::vector<Mat2> random_local_unitary(int num_qubits, Rng &rng);

/// (U_0 (x) ... (x) U_{M-1}) |psi>.
[[nodiscard]] PureState apply_local_unitary(const PureState &state,
                                            const std::vector<Mat2> &unitaries);

/// Full 2^M x 2^M matrix of the local unitary, qubit 0 least significant.
[[nodiscard]] Eigen::MatrixXcd local_unitary_matrix(const std::vector<Mat2> &unitaries);

/// Mixture of `rank` Haar-random states with Dirichlet(1) weights.
[[nodiscard]] DensityMatrix random_density_matrix(int num_qubits, int rank,
                                                  Rng &rng);

} // namespace entdist
