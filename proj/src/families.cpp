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

#include "entdist/families.hpp"

#include <algorithm>
#include <cmath>

namespace entdist {

namespace {

constexpr double kRangeSlack = 1e-12;

void require_range(double x, double lo, double hi, const char *name) {
    if (!std::isfinite(x) || x < lo - kRangeSlack || x > hi + kRangeSlack) {
        throw Error(std::string(name) + " = " + std::to_string(x) +
                    " outside [" + std::to_string(lo) + ", " +
                    std::to_string(hi) + "]");
    }
}

void require_family_qubits(int m) {
    if (m < 2 || m > 24) {
        throw Error("family states need 2 <= M <= 24, got " + std::to_string(m));
    }
}

double sign_or_plus(double x) {
    return std::abs(x) <= tol::kDegenerate ? 1.0 : (x > 0.0 ? 1.0 : -1.0);
}

} // namespace

std::string to_string(FamilyKind kind) {
    switch (kind) {
    case FamilyKind::GHZL:
        return "ghzl";
    case FamilyKind::BRS:
        return "brs";
    case FamilyKind::W:
        return "w";
    }
    return "?";
}

FamilyKind family_kind_from_string(const std::string &name) {
    std::string lower = name;
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    if (lower == "ghzl" || lower == "ghz") {
        return FamilyKind::GHZL;
    }
    if (lower == "brs") {
        return FamilyKind::BRS;
    }
    if (lower == "w") {
        return FamilyKind::W;
    }
    throw Error("unknown family '" + name + "' (expected ghzl, brs or w)");
}

void FamilySpec::validate() const {
    require_family_qubits(num_qubits);
    switch (kind) {
    case FamilyKind::GHZL:
        if (params.size() != 1) {
            throw Error("ghzl takes one parameter theta");
        }
        require_range(params[0], 0.0, kPi / 2, "theta");
        break;
    case FamilyKind::BRS:
        if (params.size() != 1) {
            throw Error("brs takes one parameter phi");
        }
        require_range(params[0], 0.0, 2 * kPi, "phi");
        break;
    case FamilyKind::W:
        if (params.size() != static_cast<std::size_t>(num_qubits - 1)) {
            throw Error("w state on " + std::to_string(num_qubits) +
                        " qubits takes " + std::to_string(num_qubits - 1) +
                        " angles, got " + std::to_string(params.size()));
        }
        for (double t : params) {
            require_range(t, 0.0, kPi / 2, "theta_j");
        }
        break;
    }
}

PureState ghzl_state(int num_qubits, double theta) {
    FamilySpec{FamilyKind::GHZL, num_qubits, {theta}}.validate();
    std::vector<cplx> amps(dim_of(num_qubits));
    amps.front() = std::cos(theta);
    amps.back() = std::sin(theta);
    return PureState::normalized(std::move(amps));
}

int count_01_pairs(std::size_t k, int num_qubits) {
    int n = 0;
    for (int j = 0; j + 1 < num_qubits; ++j) {
        const bool high = ((k >> (j + 1)) & 1U) != 0;
        const bool low = ((k >> j) & 1U) != 0;
        n += (!high && low) ? 1 : 0;
    }
    return n;
}

PureState brs_state(int num_qubits, double phi) {
    FamilySpec{FamilyKind::BRS, num_qubits, {phi}}.validate();
    const std::size_t dim = dim_of(num_qubits);
    std::vector<cplx> amps(dim, cplx(std::pow(2.0, -0.5 * num_qubits), 0.0));
    const cplx alpha = std::polar(1.0, -phi) - 1.0;
    // Factor (I + alpha P0^{j+1} P1^{j}) for every chain link (j, j+1).
    for (int j = 0; j + 1 < num_qubits; ++j) {
        const std::size_t lo = std::size_t{1} << j;
        const std::size_t hi = std::size_t{1} << (j + 1);
        for (std::size_t k = 0; k < dim; ++k) {
            if ((k & lo) != 0 && (k & hi) == 0) {
                amps[k] += alpha * amps[k];
            }
        }
    }
    return PureState::normalized(std::move(amps));
}

PureState brs_state_combinatorial(int num_qubits, double phi) {
    FamilySpec{FamilyKind::BRS, num_qubits, {phi}}.validate();
    const std::size_t dim = dim_of(num_qubits);
    const double scale = std::pow(2.0, -0.5 * num_qubits);
    std::vector<cplx> amps(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        amps[k] = std::polar(scale, -phi * count_01_pairs(k, num_qubits));
    }
    return PureState(std::move(amps), 1e-10);
}

std::vector<double> w_amplitudes(const std::vector<double> &angles) {
    std::vector<double> alpha;
    double prefix = 1.0;
    for (double t : angles) {
        alpha.push_back(prefix * std::cos(t));
        prefix *= std::sin(t);
    }
    alpha.push_back(prefix);
    return alpha;
}

PureState w_state(int num_qubits, const std::vector<double> &angles) {
    FamilySpec{FamilyKind::W, num_qubits, angles}.validate();
    const auto alpha = w_amplitudes(angles);
    std::vector<cplx> amps(dim_of(num_qubits));
    for (int j = 0; j < num_qubits; ++j) {
        amps[std::size_t{1} << j] = alpha[static_cast<std::size_t>(j)];
    }
    return PureState::normalized(std::move(amps));
}

PureState make_state(const FamilySpec &spec) {
    spec.validate();
    switch (spec.kind) {
    case FamilyKind::GHZL:
        return ghzl_state(spec.num_qubits, spec.params[0]);
    case FamilyKind::BRS:
        return brs_state(spec.num_qubits, spec.params[0]);
    case FamilyKind::W:
        return w_state(spec.num_qubits, spec.params);
    }
    throw Error("unknown family");
}

double family_ed_closed_form(const FamilySpec &spec) {
    spec.validate();
    const int m = spec.num_qubits;
    switch (spec.kind) {
    case FamilyKind::GHZL: {
        const double s = std::sin(2.0 * spec.params[0]);
        return s * s;
    }
    case FamilyKind::BRS: {
        const double s = std::sin(spec.params[0] / 2.0);
        const double c = std::cos(spec.params[0] / 2.0);
        switch (m) {
        case 2:
            return s * s;
        case 3:
            return s * s * (3.0 + c * c) / 3.0;
        case 4:
            return s * s * (4.0 + 2.0 * c * c) / 4.0;
        default:
            throw Error("no closed form for BRS with M = " + std::to_string(m) +
                        "; use the numeric path");
        }
    }
    case FamilyKind::W: {
        double s4 = 0.0;
        for (double a : w_amplitudes(spec.params)) {
            s4 += a * a * a * a;
        }
        return 4.0 * (1.0 - s4) / m;
    }
    }
    throw Error("unknown family");
}

MetricTensor family_em_closed_form(const FamilySpec &spec) {
    spec.validate();
    const int m = spec.num_qubits;
    switch (spec.kind) {
    case FamilyKind::GHZL: {
        const double s = std::sin(2.0 * spec.params[0]);
        return {Eigen::MatrixXd::Constant(m, m, s * s)};
    }
    case FamilyKind::BRS: {
        const double s = std::sin(spec.params[0] / 2.0);
        const double c = std::cos(spec.params[0] / 2.0);
        const double s2 = s * s;
        const double c2 = c * c;
        // Frame axes follow +Bloch, so the end-qubit links carry |c|.
        const double ca = std::abs(c);
        Eigen::MatrixXd g;
        switch (m) {
        case 2:
            g = Eigen::MatrixXd::Constant(2, 2, 1.0);
            break;
        case 3:
            g.resize(3, 3);
            g << 1, ca, 0, ca, 1 + c2, ca, 0, ca, 1;
            break;
        case 4:
            g.resize(4, 4);
            g << 1, ca, 0, 0, ca, 1 + c2, c2, 0, 0, c2, 1 + c2, ca, 0, 0, ca, 1;
            break;
        default:
            throw Error("no closed-form EM for BRS with M = " + std::to_string(m));
        }
        return {s2 * g};
    }
    case FamilyKind::W: {
        if (m > 3) {
            throw Error("closed-form EM for W states is available for M <= 3");
        }
        const auto alpha = w_amplitudes(spec.params);
        Eigen::VectorXd p(m);
        Eigen::VectorXd z(m);
        for (int q = 0; q < m; ++q) {
            p(q) = alpha[static_cast<std::size_t>(q)] * alpha[static_cast<std::size_t>(q)];
            z(q) = 1.0 - 2.0 * p(q);
        }
        Eigen::MatrixXd g(m, m);
        for (int a = 0; a < m; ++a) {
            g(a, a) = 1.0 - z(a) * z(a);
            for (int b = a + 1; b < m; ++b) {
                const double v = -4.0 * p(a) * p(b) * sign_or_plus(z(a)) * sign_or_plus(z(b));
                g(a, b) = v;
                g(b, a) = v;
            }
        }
        return {g};
    }
    }
    throw Error("unknown family");
}

std::vector<Fig5Point> fig5_grid(int resolution) {
    if (resolution < 2) {
        throw Error("fig5 resolution must be at least 2");
    }
    const auto n = static_cast<std::size_t>(resolution);
    std::vector<Fig5Point> grid(n * n);
    const double step = (kPi / 2) / (resolution - 1);
#pragma omp parallel for schedule(static)
    for (int i = 0; i < resolution; ++i) {
        for (int j = 0; j < resolution; ++j) {
            // Pin the end points exactly so the boundary rows are exact.
            const double t1 = (i == resolution - 1) ? kPi / 2 : i * step;
            const double t2 = (j == resolution - 1) ? kPi / 2 : j * step;
            const auto state = w_state(3, {t1, t2});
            grid[static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j)] = {
                t1, t2, entanglement_distance_value(state) / 3.0};
        }
    }
    return grid;
}

} // namespace entdist
