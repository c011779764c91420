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
 * Dense multi-qubit pure and mixed states.
 *
 * Basis index k encodes qubit occupations little-endian: qubit mu is bit mu
 * of k. Every operation is a pure function of its arguments.
 */

#pragma once

#include <span>
#include <vector>

#include "entdist/common.hpp"

namespace entdist {

/**
 * Normalized amplitude vector over M qubits.
 *
 * Construction validates the norm; instances are immutable afterwards.
 */
class PureState {
  public:
    /// Takes amplitudes whose squared norm is 1 within `tolerance`.
    explicit PureState(std::vector<cplx> amplitudes,
                       double tolerance = tol::kNorm);

    /// Rescales arbitrary non-zero amplitudes to unit norm.
    [[nodiscard]] static PureState normalized(std::vector<cplx> amplitudes);

    /// Computational basis state |k> on M qubits.
    [[nodiscard]] static PureState basis(int num_qubits, std::size_t k);

    [[nodiscard]] int num_qubits() const noexcept { return num_qubits_; }
    [[nodiscard]] std::size_t dim() const noexcept { return amps_.size(); }
    [[nodiscard]] std::span<const cplx> amplitudes() const noexcept {
        return amps_;
    }
    [[nodiscard]] cplx operator[](std::size_t k) const { return amps_[k]; }

  private:
    int num_qubits_ = 0;
    std::vector<cplx> amps_;
};

/// Hermitian, unit-trace, positive semidefinite matrix on M qubits.
class DensityMatrix {
  public:
    explicit DensityMatrix(Eigen::MatrixXcd matrix);

    [[nodiscard]] static DensityMatrix from_pure(const PureState &state);

    /// Mixture sum_j p_j |psi_j><psi_j|; weights must sum to 1.
    [[nodiscard]] static DensityMatrix
    mixture(std::span<const double> weights, std::span<const PureState> states);

    [[nodiscard]] int num_qubits() const noexcept { return num_qubits_; }
    [[nodiscard]] const Eigen::MatrixXcd &matrix() const noexcept {
        return rho_;
    }
    [[nodiscard]] double purity() const;

  private:
    int num_qubits_ = 0;
    Eigen::MatrixXcd rho_;
};

/// Pauli expectation triple of one qubit.
struct BlochVector {
    Vec3 components = Vec3::Zero();

    [[nodiscard]] double norm() const { return components.norm(); }
};

[[nodiscard]] PureState tensor_product(std::span<const PureState> factors);

/// (v . sigma) acting on `qubit`. The axis must be a unit vector.
[[nodiscard]] PureState apply_pauli_axis(const PureState &state, int qubit,
                                         const Vec3 &axis);

/// Applies an arbitrary 2x2 matrix to one qubit; the result is renormalized.
[[nodiscard]] PureState apply_local(const PureState &state, int qubit,
                                    const Mat2 &op);

[[nodiscard]] BlochVector bloch_vector(const PureState &state, int qubit);

/// <psi| (va . sigma^a)(vb . sigma^b) |psi> for distinct qubits a, b.
[[nodiscard]] double correlator(const PureState &state, int qubit_a,
                                const Vec3 &axis_a, int qubit_b,
                                const Vec3 &axis_b);

/// Reduced state on the sorted `keep` qubits (little-endian among them).
[[nodiscard]] DensityMatrix partial_trace(const DensityMatrix &rho,
                                          std::vector<int> keep);

/// Same as partial_trace(from_pure(state), keep) without forming the full
/// 2^M x 2^M matrix.
[[nodiscard]] DensityMatrix partial_trace(const PureState &state,
                                          std::vector<int> keep);

/// Squared Fubini-Study distance 1 - |<a|b>|^2.
[[nodiscard]] double fs_distance_sq(const PureState &a, const PureState &b);

/// The Pauli matrix sigma_i, i in {1,2,3}; i = 0 gives the identity.
[[nodiscard]] Mat2 pauli(int i);

/// v . sigma
[[nodiscard]] Mat2 pauli_axis_matrix(const Vec3 &axis);

void require_unit_axis(const Vec3 &axis);

} // namespace entdist
