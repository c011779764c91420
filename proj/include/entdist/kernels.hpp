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
 * Amplitude-loop kernels over dense state vectors.
 *
 * The top-level functions are the production versions (OpenMP parallel
 * where the loop is data-parallel). `kernels::serial` holds straightforward
 * reference implementations used by the tests and the benchmark.
 */

#pragma once

#include <span>
#include <vector>

#include "entdist/common.hpp"

namespace entdist::kernels {

/// Bloch vector of every qubit.
[[nodiscard]] std::vector<Vec3> bloch_vectors(std::span<const cplx> amps,
                                              int num_qubits);

/// In-place 2x2 operator on one qubit.
void apply_single_qubit(std::span<cplx> amps, int num_qubits, int qubit,
                        const Mat2 &op);

/**
 * Matrix C with C(a,b) = <psi| sigma_{v^a}^a sigma_{v^b}^b |psi> for a != b
 * and C(a,a) = 1.
 *
 * Each qubit is first rotated so that its frame axis becomes z; all pair
 * correlators are then diagonal sums over the probability vector.
 */
[[nodiscard]] Eigen::MatrixXd frame_correlations(std::span<const cplx> amps,
                                                 int num_qubits,
                                                 std::span<const Vec3> frame);

/// Reduced density matrix of qubits (a, b); a is the low-order bit.
[[nodiscard]] Eigen::Matrix4cd two_qubit_rdm(std::span<const cplx> amps,
                                             int num_qubits, int a, int b);

/// Local unitary U with U (v.sigma) U^dagger = sigma_z.
[[nodiscard]] Mat2 rotation_to_z(const Vec3 &axis);

namespace serial {

[[nodiscard]] std::vector<Vec3> bloch_vectors(std::span<const cplx> amps,
                                              int num_qubits);

void apply_single_qubit(std::span<cplx> amps, int num_qubits, int qubit,
                        const Mat2 &op);

/// Applies both axis operators to a copy of the state for every pair.
[[nodiscard]] Eigen::MatrixXd frame_correlations(std::span<const cplx> amps,
                                                 int num_qubits,
                                                 std::span<const Vec3> frame);

} // namespace serial

} // namespace entdist::kernels
