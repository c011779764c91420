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
 * Local-unitary equivalence test through metric matching.
 *
 * Two LU-equivalent states A and B satisfy: for every frame v there is a
 * frame n with g(A, v) = g(B, n). The test samples witness frames v and
 * searches for n by minimizing the Frobenius residual |g(B, n) - g(A, v)|.
 * A witness with a residual above the inequivalence margin shows that the
 * states are not LU-equivalent (up to the optimizer's reach); a full match
 * is conclusive only for two qubits, since g carries second-order
 * correlations only.
 */

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "entdist/fsmetric.hpp"

namespace entdist {

struct MatchConfig {
    int grid_points_per_sphere = 256; // Fibonacci lattice
    int restarts = 32;
    int polish_iters = 200; // cyclic refinement sweeps
    double match_tol = 1e-8;
    double inequivalence_margin = 1e-3;
    std::uint64_t seed = 0;
    /// Declare NO_MATCH_FOUND without a search when |E(A) - E(B)| > 1e-8.
    bool measure_precheck = false;

    void validate() const;
};

/**
 * Bloch vectors and all pair correlation tensors T^{mu nu}_{ab} =
 * <sigma_a^mu sigma_b^nu> of one state; g(psi, n) for any frame follows in
 * O(M^2) without touching the amplitudes again.
 */
struct LocalCorrelations {
    int num_qubits = 0;
    std::vector<Vec3> bloch;
    std::vector<Eigen::Matrix3d> pair; // index mu * M + nu

    [[nodiscard]] static LocalCorrelations of(const PureState &state);

    [[nodiscard]] const Eigen::Matrix3d &tensor(int mu, int nu) const {
        return pair[static_cast<std::size_t>(mu * num_qubits + nu)];
    }
};

[[nodiscard]] MetricTensor metric_from_correlations(const LocalCorrelations &corr,
                                                    std::span<const Vec3> frame);

/// Fibonacci lattice of `count` points on the unit sphere.
[[nodiscard]] std::vector<Vec3> fibonacci_sphere(int count);

struct FrameMatch {
    UnitVectorFrame frame;
    double residual = 0.0;      // Frobenius norm after polishing
    double grid_residual = 0.0; // best residual after the grid stage
    int restarts_run = 0;
};

[[nodiscard]] FrameMatch frame_match(const MetricTensor &target,
                                     const PureState &state_b,
                                     const MatchConfig &cfg);

[[nodiscard]] FrameMatch frame_match(const MetricTensor &target,
                                     const LocalCorrelations &state_b,
                                     const MatchConfig &cfg);

enum class EquivalenceStatus { MatchAllWitnesses, NoMatchFound, Inconclusive };

[[nodiscard]] std::string to_string(EquivalenceStatus status);

struct Witness {
    std::string label;
    UnitVectorFrame frame_a; // v
    UnitVectorFrame frame_b; // best n
    double residual = 0.0;
};

struct EquivalenceReport {
    EquivalenceStatus status = EquivalenceStatus::Inconclusive;
    std::vector<Witness> witnesses;
    bool conclusive_for_equivalence = false;
    std::string verdict;
    double measure_gap = 0.0; // |E(A) - E(B)|
    bool measure_mismatch = false;
    double match_tol = 0.0;
    double inequivalence_margin = 0.0;

    [[nodiscard]] double max_residual() const;
};

/**
 * Witness frames: the entanglement-metric frame of A, the uniform x, y and z
 * frames, then `cfg.restarts` random frames. Witnesses are independent and
 * evaluated in parallel; the report keeps witness order.
 */
[[nodiscard]] EquivalenceReport equivalence_test(const PureState &state_a,
                                                 const PureState &state_b,
                                                 const MatchConfig &cfg = {});

} // namespace entdist
