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

#include "entdist/locc.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "entdist/convexroof.hpp"
#include "entdist/fsmetric.hpp"
#include "entdist/kernels.hpp"
#include "entdist/random.hpp"

namespace entdist {

namespace {

constexpr double kDropProbability = 1e-14;
constexpr double kMonotoneTol = 1e-9;
constexpr double kLuTol = 1e-10;
constexpr double kConcavityTol = 1e-12;

std::vector<double> per_qubit_ed(const PureState &state) {
    const auto b = kernels::bloch_vectors(state.amplitudes(), state.num_qubits());
    std::vector<double> e(b.size());
    for (std::size_t q = 0; q < b.size(); ++q) {
        e[q] = 1.0 - b[q].squaredNorm();
    }
    return e;
}

double sum(const std::vector<double> &v) {
    double s = 0.0;
    for (double x : v) {
        s += x;
    }
    return s;
}

Mat2 psd_sqrt(const Mat2 &a) {
    const Eigen::SelfAdjointEigenSolver<Mat2> es(a);
    const Eigen::Vector2d lam = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    return es.eigenvectors() * lam.asDiagonal() * es.eigenvectors().adjoint();
}

Mat2 ginibre(Rng &rng) {
    std::normal_distribution<double> g;
    Mat2 m;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            m(i, j) = cplx(g(rng), g(rng));
        }
    }
    return m;
}

// Uniform point in the Bloch ball, as a density matrix.
Mat2 random_qubit_density(Rng &rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const Vec3 b = random_unit_vector(rng) * std::cbrt(u(rng));
    Mat2 x = 0.5 * Mat2::Identity();
    for (int a = 0; a < 3; ++a) {
        x += 0.5 * b(a) * pauli(a + 1);
    }
    return x;
}

PureState random_product_state(int num_qubits, Rng &rng) {
    std::vector<PureState> factors;
    for (int q = 0; q < num_qubits; ++q) {
        factors.push_back(random_state(1, rng));
    }
    return tensor_product(factors);
}

} // namespace

void UnilocalKraus::validate() const {
    if (operators.empty()) {
        throw Error("measurement needs at least one Kraus operator");
    }
    Mat2 total = Mat2::Zero();
    for (const Mat2 &m : operators) {
        total += m.adjoint() * m;
    }
    const Eigen::SelfAdjointEigenSolver<Mat2> es(Mat2::Identity() - total);
    if (es.eigenvalues().minCoeff() < -tol::kPsdSlack) {
        throw Error("Kraus operators violate sum M^dag M <= I");
    }
    if (complete && es.eigenvalues().cwiseAbs().maxCoeff() > tol::kPsdSlack) {
        throw Error("Kraus operators flagged complete but sum M^dag M != I");
    }
}

UnilocalKraus UnilocalKraus::projective_z(int qubit) {
    Mat2 p0 = Mat2::Zero();
    Mat2 p1 = Mat2::Zero();
    p0(0, 0) = 1.0;
    p1(1, 1) = 1.0;
    return {qubit, {p0, p1}, true};
}

UnilocalKraus random_unilocal_measurement(int qubit, std::uint64_t seed, bool complete) {
    Rng rng = make_rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const Mat2 g = ginibre(rng);
    const Eigen::JacobiSVD<Mat2> svd(g);
    const Mat2 m0 = g * (u(rng) / svd.singularValues()(0));
    Mat2 m1 = psd_sqrt(Mat2::Identity() - m0.adjoint() * m0);
    if (!complete) {
        m1 *= u(rng);
    }
    return {qubit, {m0, m1}, complete};
}

std::vector<Outcome> apply_measurement(const PureState &state, const UnilocalKraus &kraus) {
    if (kraus.qubit < 0 || kraus.qubit >= state.num_qubits()) {
        throw Error("measured qubit out of range");
    }
    std::vector<Outcome> out;
    for (const Mat2 &m : kraus.operators) {
        std::vector<cplx> amps(state.amplitudes().begin(), state.amplitudes().end());
        kernels::apply_single_qubit(amps, state.num_qubits(), kraus.qubit, m);
        double p = 0.0;
        for (const cplx &a : amps) {
            p += std::norm(a);
        }
        if (p < kDropProbability) {
            continue;
        }
        out.push_back({p, PureState::normalized(std::move(amps))});
    }
    return out;
}

std::vector<double> monotonicity_per_qubit(const PureState &state, const UnilocalKraus &kraus) {
    std::vector<double> margin = per_qubit_ed(state);
    for (const Outcome &o : apply_measurement(state, kraus)) {
        const auto e = per_qubit_ed(o.state);
        for (std::size_t q = 0; q < e.size(); ++q) {
            margin[q] -= o.probability * e[q];
        }
    }
    return margin;
}

double check_monotonicity(const PureState &state, const UnilocalKraus &kraus) {
    return sum(monotonicity_per_qubit(state, kraus));
}

double check_lu_invariance(const PureState &state, std::uint64_t seed) {
    Rng rng = make_rng(seed);
    const auto u = random_local_unitary(state.num_qubits(), rng);
    return std::abs(entanglement_distance_value(apply_local_unitary(state, u)) -
                    entanglement_distance_value(state));
}

double check_ancilla(const PureState &state, const PureState &ancilla) {
    const std::vector<PureState> factors{state, ancilla};
    const auto e = per_qubit_ed(tensor_product(factors));
    double restricted = 0.0;
    for (int q = 0; q < state.num_qubits(); ++q) {
        restricted += e[static_cast<std::size_t>(q)];
    }
    return std::abs(restricted - entanglement_distance_value(state));
}

double check_trace_removal(const PureState &state, std::vector<int> removed) {
    const int m = state.num_qubits();
    std::sort(removed.begin(), removed.end());
    removed.erase(std::unique(removed.begin(), removed.end()), removed.end());
    std::vector<int> keep;
    for (int q = 0; q < m; ++q) {
        if (!std::binary_search(removed.begin(), removed.end(), q)) {
            keep.push_back(q);
        }
    }
    if (keep.empty() || static_cast<int>(keep.size()) + static_cast<int>(removed.size()) != m) {
        throw Error("removed qubits must be a proper subset of the register");
    }
    const DensityMatrix reduced = partial_trace(state, keep);
    const int rank = spectrum(reduced).rank();
    const Ensemble eig = realize_ensemble(
        reduced, {rank, Eigen::VectorXd::Zero(mixing_parameter_count(rank, rank))});
    double margin = 0.0;
    for (int q : keep) {
        margin += single_qubit_ed_via_purity(state, q);
    }
    for (std::size_t j = 0; j < eig.states.size(); ++j) {
        margin -= eig.weights[j] * entanglement_distance_value(eig.states[j]);
    }
    return margin;
}

double purity_deficit(const Eigen::Matrix2cd &x) {
    return 2.0 * (1.0 - (x * x).trace().real());
}

MonotonicityReport check_concavity_f(std::uint64_t seed, int trials) {
    if (trials < 1) {
        throw Error("trials must be >= 1");
    }
    MonotonicityReport rep{"concavity", trials, 0, 1.0, kConcavityTol, seed};
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int t = 0; t < trials; ++t) {
        Rng rng = make_rng(seed, static_cast<std::uint64_t>(t));
        const Mat2 x1 = random_qubit_density(rng);
        const Mat2 x2 = random_qubit_density(rng);
        const double l = u(rng);
        const double margin = purity_deficit(l * x1 + (1.0 - l) * x2) -
                              l * purity_deficit(x1) - (1.0 - l) * purity_deficit(x2);
        rep.worst_margin = std::min(rep.worst_margin, margin);
        if (margin < -kConcavityTol) {
            ++rep.violations;
        }
    }
    return rep;
}

const std::vector<std::string> &property_suites() {
    static const std::vector<std::string> names{"monotonicity", "lu", "ancilla", "trace",
                                                "concavity"};
    return names;
}

MonotonicityReport run_property_suite(const std::string &suite, int trials, std::uint64_t seed) {
    if (trials < 1) {
        throw Error("trials must be >= 1");
    }
    if (suite == "concavity") {
        return check_concavity_f(seed, trials);
    }
    const auto &names = property_suites();
    if (std::find(names.begin(), names.end(), suite) == names.end()) {
        throw Error("unknown suite '" + suite + "'");
    }
    // Deviation-type checks pass below the tolerance; margin-type checks pass
    // above minus the tolerance.
    const bool deviation = suite == "lu" || suite == "ancilla";
    const double tolerance = deviation ? kLuTol : kMonotoneTol;

    std::vector<double> value(static_cast<std::size_t>(trials));
#pragma omp parallel for schedule(dynamic)
    for (int t = 0; t < trials; ++t) {
        Rng rng = make_rng(seed, static_cast<std::uint64_t>(t));
        const int m = 2 + t % 2;
        const PureState psi = random_state(m, rng);
        std::uniform_int_distribution<int> pick(0, m - 1);
        double v = 0.0;
        if (suite == "monotonicity") {
            const int q = pick(rng);
            v = check_monotonicity(psi, random_unilocal_measurement(q, rng(), t % 4 < 2));
        } else if (suite == "lu") {
            v = check_lu_invariance(psi, rng());
        } else if (suite == "ancilla") {
            v = check_ancilla(psi, random_product_state(1 + t % 2, rng));
        } else {
            v = check_trace_removal(psi, {pick(rng)});
        }
        value[static_cast<std::size_t>(t)] = v;
    }

    MonotonicityReport rep{suite, trials, 0, deviation ? 0.0 : 1e300, tolerance, seed};
    for (double v : value) {
        if (deviation) {
            rep.worst_margin = std::max(rep.worst_margin, v);
            rep.violations += v > tolerance ? 1 : 0;
        } else {
            rep.worst_margin = std::min(rep.worst_margin, v);
            rep.violations += v < -tolerance ? 1 : 0;
        }
    }
    return rep;
}

} // namespace entdist
