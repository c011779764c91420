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
 * Derivative-free Nelder-Mead simplex minimizer.
 */

#pragma once

#include <functional>

#include <Eigen/Dense>

namespace entdist {

struct NelderMeadOptions {
    int max_iters = 500;
    double ftol = 1e-12; // spread of simplex values
    double xtol = 1e-10; // simplex diameter
    /// Dimension-dependent coefficients (Gao & Han), better beyond ~4 dims.
    bool adaptive = true;
};

struct NelderMeadResult {
    Eigen::VectorXd x;
    double value = 0.0;
    int iterations = 0;
    int evaluations = 0;
};

using Objective = std::function<double(const Eigen::VectorXd &)>;

/// Minimizes `f` from an axis-aligned simplex of edge `step` around x0.
[[nodiscard]] NelderMeadResult nelder_mead(const Objective &f, const Eigen::VectorXd &x0,
                                           double step,
                                           const NelderMeadOptions &opts = {});

} // namespace entdist
