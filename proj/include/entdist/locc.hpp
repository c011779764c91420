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
 * Randomized checks that E behaves as an entanglement monotone: LU
 * invariance, non-increase under unilocal measurements on average, ancilla
 * invariance, non-increase under removal of qubits, and concavity of
 * f(x) = 2 (1 - Tr x^2).
 */

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "entdist/qstate.hpp"

namespace entdist {

/// Kraus operators acting on a single qubit.
struct UnilocalKraus {
    int qubit = 0;
    std::vector<Mat2> operators;
    bool complete = false;

    /// Checks sum M^dag M <= I (eigenvalues of the slack >= -1e-10).
    void validate() const;

    /// {|0><0|, |1><1|} on `qubit`.
    [[nodiscard]] static UnilocalKraus projective_z(int qubit);
};

/**
 * Two-outcome measurement on `qubit`. M_0 is a Ginibre matrix scaled to
 * operator norm u ~ U(0, 1); M_1 = sqrt(I - M_0^dag M_0), times t ~ U(0, 1)
 * when the measurement is incomplete.
 */
[[nodiscard]] UnilocalKraus random_unilocal_measurement(int qubit, std::uint64_t seed,
                                                        bool complete);

struct Outcome {
    double probability = 0.0;
    PureState state;
};

/// Outcomes with probability below 1e-14 are dropped.
[[nodiscard]] std::vector<Outcome> apply_measurement(const PureState &state,
                                                     const UnilocalKraus &kraus);

/// E(psi) - sum_j p_j E(psi_j); non-negative up to rounding.
[[nodiscard]] double check_monotonicity(const PureState &state, const UnilocalKraus &kraus);

/// Per-qubit version of check_monotonicity.
[[nodiscard]] std::vector<double> monotonicity_per_qubit(const PureState &state,
                                                         const UnilocalKraus &kraus);

/// |E(U psi) - E(psi)| for a Haar-random local unitary drawn from `seed`.
[[nodiscard]] double check_lu_invariance(const PureState &state, std::uint64_t seed);

/// |E(psi (x) chi) - E(psi)| with the sum restricted to the qubits of psi.
[[nodiscard]] double check_ancilla(const PureState &state, const PureState &ancilla);

/**
 * sum over surviving qubits of E_mu(psi) minus the eigen-ensemble average of
 * E_mu over Tr_removed |psi><psi|. Every ensemble upper-bounds the roof, so a
 * non-negative margin certifies non-increase.
 */
[[nodiscard]] double check_trace_removal(const PureState &state, std::vector<int> removed);

/// 2 (1 - Tr x^2) for a single-qubit density matrix.
[[nodiscard]] double purity_deficit(const Eigen::Matrix2cd &x);

struct MonotonicityReport {
    std::string suite;
    int trials = 0;
    int violations = 0;
    /// Worst observed check value: smallest margin for monotonicity, trace
    /// and concavity; largest deviation for lu and ancilla.
    double worst_margin = 0.0;
    double tolerance = 0.0;
    std::uint64_t seed = 0;
};

/// Violations of f(l x1 + (1-l) x2) >= l f(x1) + (1-l) f(x2) - 1e-12.
[[nodiscard]] MonotonicityReport check_concavity_f(std::uint64_t seed, int trials);

/// Suite names: monotonicity, lu, ancilla, trace, concavity. Random states
/// alternate between two and three qubits.
[[nodiscard]] MonotonicityReport run_property_suite(const std::string &suite, int trials,
                                                    std::uint64_t seed);

[[nodiscard]] const std::vector<std::string> &property_suites();

} // namespace entdist
