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
 * Fubini-Study metric restricted to local Pauli rotations, and the
 * entanglement distance / entanglement metric built from it.
 *
 * For a frame v = (v^0, ..., v^{M-1}) of unit axes,
 *
 *   g_{mu nu}(psi, v) = <sigma_v^mu sigma_v^nu> - <sigma_v^mu><sigma_v^nu>,
 *
 * and the entanglement distance is the infimum of tr g over frames, reached
 * at v^mu parallel to the Bloch vector of qubit mu:
 *
 *   E(psi) = M - sum_mu |<sigma^mu>|^2.
 */

#pragma once

#include <span>
#include <vector>

#include "entdist/qstate.hpp"

namespace entdist {

/// One unit axis per qubit.
class UnitVectorFrame {
  public:
    UnitVectorFrame() = default;
    explicit UnitVectorFrame(std::vector<Vec3> vectors);

    /// Every qubit along the same axis.
    [[nodiscard]] static UnitVectorFrame uniform(int num_qubits, const Vec3 &axis);

    [[nodiscard]] int size() const noexcept {
        return static_cast<int>(vectors_.size());
    }
    [[nodiscard]] const Vec3 &operator[](int q) const {
        return vectors_[static_cast<std::size_t>(q)];
    }
    [[nodiscard]] std::span<const Vec3> vectors() const noexcept {
        return vectors_;
    }

  private:
    std::vector<Vec3> vectors_;
};

/// Real symmetric M x M matrix g_{mu nu}.
struct MetricTensor {
    Eigen::MatrixXd entries;

    [[nodiscard]] int size() const { return static_cast<int>(entries.rows()); }
    [[nodiscard]] double trace() const { return entries.trace(); }
};

struct OptimalFrame {
    UnitVectorFrame frame;
    std::vector<int> degenerate; // qubits with |Bloch| <= 1e-9
};

struct EdReport {
    double total = 0.0;
    std::vector<double> per_qubit;
    UnitVectorFrame frame;
    MetricTensor em;
    std::vector<int> degenerate_qubits;
};

[[nodiscard]] MetricTensor metric_tensor(const PureState &state,
                                         const UnitVectorFrame &frame);

/// Same tensor through the serial reference kernels; test use only.
[[nodiscard]] MetricTensor metric_tensor_reference(const PureState &state,
                                                   const UnitVectorFrame &frame);

[[nodiscard]] double metric_trace(const PureState &state,
                                  const UnitVectorFrame &frame);

[[nodiscard]] OptimalFrame optimal_frame(const PureState &state);

[[nodiscard]] EdReport entanglement_distance(const PureState &state);

/// Total E only; skips the metric tensor.
[[nodiscard]] double entanglement_distance_value(const PureState &state);

/// 2 (1 - Tr rho_mu^2) through the single-qubit marginal.
[[nodiscard]] double single_qubit_ed_via_purity(const PureState &state, int qubit);

/// sum_mu D_FS^2(psi, sigma_{v^mu}^mu psi).
[[nodiscard]] double conjugate_distance_sum(const PureState &state,
                                            const UnitVectorFrame &frame);

/// 2 |w0 w3 - w1 w2| for a two-qubit state.
[[nodiscard]] double concurrence_2q(const PureState &state);

/// Connected components of |g_{mu nu}| > tol, each sorted, ordered by
/// smallest member.
[[nodiscard]] std::vector<std::vector<int>> block_structure(const MetricTensor &em,
                                                            double tol = 1e-8);

} // namespace entdist
