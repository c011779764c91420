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

#include "entdist/optimize.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace entdist {

NelderMeadResult nelder_mead(const Objective &f, const Eigen::VectorXd &x0,
                             double step, const NelderMeadOptions &opts) {
    const auto n = x0.size();
    const double dn = static_cast<double>(n);
    const double alpha = 1.0;
    const double gamma = opts.adaptive ? 1.0 + 2.0 / dn : 2.0;
    const double rho = opts.adaptive ? 0.75 - 1.0 / (2.0 * dn) : 0.5;
    const double sigma = opts.adaptive ? 1.0 - 1.0 / dn : 0.5;

    std::vector<Eigen::VectorXd> pts(static_cast<std::size_t>(n + 1), x0);
    std::vector<double> vals(static_cast<std::size_t>(n + 1));
    for (Eigen::Index i = 0; i < n; ++i) {
        pts[static_cast<std::size_t>(i + 1)](i) += step;
    }
    NelderMeadResult res;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        vals[i] = f(pts[i]);
        ++res.evaluations;
    }
    std::vector<std::size_t> order(pts.size());

    for (res.iterations = 0; res.iterations < opts.max_iters; ++res.iterations) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
        const std::size_t best = order.front();
        const std::size_t worst = order.back();
        const std::size_t second = order[order.size() - 2];

        double diameter = 0.0;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            diameter = std::max(diameter, (pts[i] - pts[best]).cwiseAbs().maxCoeff());
        }
        if (vals[worst] - vals[best] <= opts.ftol && diameter <= opts.xtol) {
            break;
        }

        Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (i != worst) {
                centroid += pts[i];
            }
        }
        centroid /= dn;

        const Eigen::VectorXd xr = centroid + alpha * (centroid - pts[worst]);
        const double fr = f(xr);
        ++res.evaluations;
        if (fr < vals[best]) {
            const Eigen::VectorXd xe = centroid + gamma * (xr - centroid);
            const double fe = f(xe);
            ++res.evaluations;
            if (fe < fr) {
                pts[worst] = xe;
                vals[worst] = fe;
            } else {
                pts[worst] = xr;
                vals[worst] = fr;
            }
            continue;
        }
        if (fr < vals[second]) {
            pts[worst] = xr;
            vals[worst] = fr;
            continue;
        }
        const bool outside = fr < vals[worst];
        const Eigen::VectorXd xc = outside ? Eigen::VectorXd(centroid + rho * (xr - centroid))
                                           : Eigen::VectorXd(centroid + rho * (pts[worst] - centroid));
        const double fc = f(xc);
        ++res.evaluations;
        if (fc < (outside ? fr : vals[worst])) {
            pts[worst] = xc;
            vals[worst] = fc;
            continue;
        }
        // Shrink towards the best vertex.
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (i == best) {
                continue;
            }
            pts[i] = pts[best] + sigma * (pts[i] - pts[best]);
            vals[i] = f(pts[i]);
            ++res.evaluations;
        }
    }
    const auto best_it = std::min_element(vals.begin(), vals.end());
    const auto best = static_cast<std::size_t>(std::distance(vals.begin(), best_it));
    res.x = pts[best];
    res.value = vals[best];
    return res;
}

} // namespace entdist
