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
 * Entanglement distance of bosonic multi-mode states in a truncated Fock
 * basis:
 *
 *   E(s) = 4 sum_mu (<a_mu^dag a_mu> - |<a_mu>|^2).
 *
 * Amplitude index k = n_0 + (N+1) n_1 + ..., mode 0 varying fastest.
 */

#pragma once

#include <vector>

#include "entdist/common.hpp"

namespace entdist {

inline constexpr double kFockTail = 1e-8;
inline constexpr int kMaxCutoff = 256;

struct FockState {
    int num_modes = 1;
    int cutoff = 0; // highest retained occupation N per mode
    std::vector<cplx> amplitudes;
    double tail_bound = 0.0; // norm^2 lost to truncation

    /// Size, norm within 1e-10 and tail below 1e-8.
    void validate() const;

    [[nodiscard]] std::size_t dim_per_mode() const {
        return static_cast<std::size_t>(cutoff) + 1;
    }
};

struct CutoffPolicy {
    int cutoff = 0; // 0: automatic, aiming for a tail below 1e-14
    bool auto_raise = true;
    int max_cutoff = kMaxCutoff;
};

/// Poisson weight beyond n = cutoff for mean |alpha|^2.
[[nodiscard]] double coherent_tail(cplx alpha, int cutoff);

[[nodiscard]] FockState coherent_state(cplx alpha, const CutoffPolicy &policy = {});

[[nodiscard]] FockState number_state(int n, int cutoff);

/// |a> (x) |b>, both at the larger of the two cutoffs.
[[nodiscard]] FockState tensor_product(const FockState &a, const FockState &b);

struct CatSpec {
    cplx alpha1;
    cplx alpha2;

    /// p = exp(-|alpha1 - alpha2|^2)
    [[nodiscard]] double overlap() const;
};

/// c (|alpha1, alpha2> + |alpha2, alpha1>), renormalized after truncation.
[[nodiscard]] FockState symmetric_cat(const CatSpec &spec, const CutoffPolicy &policy = {});

/// 2 (1 - p) / (1 + p) |alpha1 - alpha2|^2
[[nodiscard]] double cat_ed_closed_form(const CatSpec &spec);

/// Per-mode variance terms <n> - |<a>|^2.
[[nodiscard]] std::vector<double> cv_mode_terms(const FockState &state);

[[nodiscard]] double cv_ed(const FockState &state);

/**
 * D(beta) on every mode. The operator is exponentiated in a padded basis and
 * the result truncated to the smallest cutoff whose tail is below 1e-14
 * (1e-8 at worst).
 */
[[nodiscard]] FockState displace_all(const FockState &state, cplx beta);

} // namespace entdist
