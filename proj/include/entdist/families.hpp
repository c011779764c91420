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
 * Parameter families of multi-qubit states with closed-form entanglement
 * distance and entanglement metric:
 *
 *  - GHZ-like:  cos(theta)|0...0> + sin(theta)|1...1>,  theta in [0, pi/2]
 *  - BRS:       open-chain Ising phase gate applied to |+>^M, phi in [0, 2pi]
 *  - W:         sum_j alpha_j |2^(j-1)>, alpha on the unit sphere through
 *               nested sine/cosine angles in [0, pi/2]
 */

#pragma once

#include <string>
#include <vector>

#include "entdist/fsmetric.hpp"

namespace entdist {

enum class FamilyKind { GHZL, BRS, W };

struct FamilySpec {
    FamilyKind kind = FamilyKind::GHZL;
    int num_qubits = 2;
    std::vector<double> params;

    /// Throws when M < 2 or a parameter is out of range.
    void validate() const;
};

[[nodiscard]] std::string to_string(FamilyKind kind);
[[nodiscard]] FamilyKind family_kind_from_string(const std::string &name);

[[nodiscard]] PureState ghzl_state(int num_qubits, double theta);

/// Built by applying each (I + alpha P) chain factor to |+>^M.
[[nodiscard]] PureState brs_state(int num_qubits, double phi);

/// Amplitudes 2^{-M/2} exp(-i phi n(k)) with n(k) the number of "01"
/// substrings in the bit string of k read from the most significant bit.
[[nodiscard]] PureState brs_state_combinatorial(int num_qubits, double phi);

/// Number of "01" substrings of k written as b_{M-1} ... b_0.
[[nodiscard]] int count_01_pairs(std::size_t k, int num_qubits);

[[nodiscard]] PureState w_state(int num_qubits, const std::vector<double> &angles);

/// Spherical-chart amplitudes alpha_1..alpha_M of the W family.
[[nodiscard]] std::vector<double> w_amplitudes(const std::vector<double> &angles);

[[nodiscard]] PureState make_state(const FamilySpec &spec);

/// Closed-form E/M.
[[nodiscard]] double family_ed_closed_form(const FamilySpec &spec);

/**
 * Closed-form entanglement metric in the library gauge, where each frame
 * axis points along +Bloch (and +z for a zero Bloch vector).
 *
 * Supported: GHZL any M, BRS M in {2,3,4}, W M in {2,3}.
 */
[[nodiscard]] MetricTensor family_em_closed_form(const FamilySpec &spec);

struct Fig5Point {
    double theta1 = 0.0;
    double theta2 = 0.0;
    double ed_per_qubit = 0.0;
};

/// E/3 of the three-qubit W family on a resolution x resolution grid over
/// [0, pi/2]^2, row-major in theta1.
[[nodiscard]] std::vector<Fig5Point> fig5_grid(int resolution);

} // namespace entdist
