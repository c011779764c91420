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
 * Mixed-state entanglement distance by convex-roof minimization.
 *
 * Every ensemble {p_j, psi_j} of rho = sum_k lambda_k |e_k><e_k| has the
 * form |psi~_j> = sum_k V_jk sqrt(lambda_k) |e_k> for an n x r isometry V.
 * V is parameterized by complex Givens rotations and column phases, and the
 * ensemble average of E_mu is minimized over those angles by multi-start
 * Nelder-Mead. The result is the best value found, an upper bound on the
 * roof.
 */

#pragma once

#include <cstdint>
#include <vector>

#include "entdist/qstate.hpp"

namespace entdist {

struct Ensemble {
    std::vector<double> weights;
    std::vector<PureState> states;

    [[nodiscard]] DensityMatrix density() const;
};

struct RoofConfig {
    int ensemble_size = 0; // 0 selects rank + 2
    int restarts = 64;
    int max_iters = 500;
    double tol = 1e-9;
    std::uint64_t seed = 0;
};

/// Eigenpairs of rho with eigenvalue > 1e-10, in descending order.
struct Spectrum {
    std::vector<double> values;
    std::vector<Eigen::VectorXcd> vectors;

    [[nodiscard]] int rank() const { return static_cast<int>(values.size()); }
};

[[nodiscard]] Spectrum spectrum(const DensityMatrix &rho);

/// Isometry angles: (theta, phi) for every row pair (i, j) with i < rank,
/// i < j < n, followed by `rank` column phases.
struct MixingParams {
    int ensemble_size = 0;
    Eigen::VectorXd angles;
};

[[nodiscard]] int mixing_parameter_count(int ensemble_size, int rank);

/// The n x r isometry encoded by `angles`; all-zero angles give [I; 0].
[[nodiscard]] Eigen::MatrixXcd mixing_isometry(int ensemble_size, int rank,
                                               const Eigen::VectorXd &angles);

/// Members with weight below 1e-12 are dropped.
[[nodiscard]] Ensemble realize_ensemble(const DensityMatrix &rho,
                                        const MixingParams &mixing);

struct RoofResult {
    double value = 0.0;       // best ensemble average found
    double eigen_bound = 0.0; // average over the eigen-ensemble
    int ensemble_size = 0;
    int restarts = 0;
    int best_restart = 0;
    long evaluations = 0;
};

[[nodiscard]] RoofResult mixed_single_qubit_ed(const DensityMatrix &rho, int qubit,
                                               const RoofConfig &cfg = {});

struct MixedEdReport {
    std::vector<RoofResult> per_qubit;
    double total = 0.0;
};

/// Each qubit is minimized independently; the total is their sum.
[[nodiscard]] MixedEdReport mixed_ed(const DensityMatrix &rho, const RoofConfig &cfg = {});

} // namespace entdist
