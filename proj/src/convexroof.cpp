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

#include "entdist/convexroof.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "entdist/optimize.hpp"
#include "entdist/random.hpp"

namespace entdist {

namespace {

constexpr double kRankCut = 1e-10;
constexpr double kMinWeight = 1e-12;

// Rows i and j of x mixed by the SU(2) rotation (theta, phi).
void givens(Eigen::MatrixXcd &x, int i, int j, double theta, double phi) {
    const double c = std::cos(theta);
    const cplx s = std::sin(theta) * std::polar(1.0, phi);
    for (Eigen::Index col = 0; col < x.cols(); ++col) {
        const cplx xi = x(i, col);
        const cplx xj = x(j, col);
        x(i, col) = c * xi - s * xj;
        x(j, col) = std::conj(s) * xi + c * xj;
    }
}

int resolve_size(const RoofConfig &cfg, int rank) {
    const int n = cfg.ensemble_size == 0 ? rank + 2 : cfg.ensemble_size;
    if (n < rank) {
        throw Error("ensemble_size " + std::to_string(n) + " is below rank(rho) = " +
                    std::to_string(rank));
    }
    if (cfg.restarts < 1 || cfg.max_iters < 1 || !(cfg.tol > 0.0)) {
        throw Error("roof config needs restarts >= 1, max_iters >= 1 and tol > 0");
    }
    return n;
}

// sigma_a acting on `qubit` of a dense vector.
Eigen::VectorXcd apply_sigma(const Eigen::VectorXcd &v, int qubit, int a) {
    const std::size_t bit = std::size_t{1} << qubit;
    Eigen::VectorXcd out(v.size());
    for (Eigen::Index k = 0; k < v.size(); ++k) {
        const auto uk = static_cast<std::size_t>(k);
        const bool one = (uk & bit) != 0;
        switch (a) {
        case 1:
            out(k) = v(static_cast<Eigen::Index>(uk ^ bit));
            break;
        case 2:
            // sigma_y |0> = i|1>, sigma_y |1> = -i|0>
            out(k) = (one ? cplx(0, 1) : cplx(0, -1)) * v(static_cast<Eigen::Index>(uk ^ bit));
            break;
        default:
            out(k) = one ? -v(k) : v(k);
            break;
        }
    }
    return out;
}

/**
 * Sum_j p_j E_mu(psi_j) in the eigenbasis. With w_j the j-th row of V the
 * unnormalized Bloch vector is B_j^a = w_j^* S^a w_j^T, and
 * p_j E_mu(psi_j) = p_j - |B_j|^2 / p_j.
 */
class RoofObjective {
  public:
    RoofObjective(const Spectrum &spec, int qubit, int ensemble_size)
        : n_(ensemble_size), r_(spec.rank()), lambda_(r_) {
        for (int k = 0; k < r_; ++k) {
            lambda_(k) = spec.values[static_cast<std::size_t>(k)];
        }
        for (int a = 0; a < 3; ++a) {
            s_[static_cast<std::size_t>(a)].resize(r_, r_);
        }
        for (int l = 0; l < r_; ++l) {
            const Eigen::VectorXcd ul =
                std::sqrt(lambda_(l)) * spec.vectors[static_cast<std::size_t>(l)];
            for (int a = 0; a < 3; ++a) {
                const Eigen::VectorXcd su = apply_sigma(ul, qubit, a + 1);
                for (int k = 0; k < r_; ++k) {
                    s_[static_cast<std::size_t>(a)](k, l) =
                        std::sqrt(lambda_(k)) *
                        spec.vectors[static_cast<std::size_t>(k)].dot(su);
                }
            }
        }
    }

    double operator()(const Eigen::VectorXd &angles) const {
        return value(mixing_isometry(n_, r_, angles));
    }

    double value(const Eigen::MatrixXcd &v) const {
        double total = 0.0;
        for (int j = 0; j < n_; ++j) {
            const Eigen::RowVectorXcd w = v.row(j);
            const double p = w.cwiseAbs2().dot(lambda_.transpose());
            if (p < kMinWeight) {
                continue;
            }
            double b2 = 0.0;
            for (const auto &s : s_) {
                b2 += std::norm((w.conjugate() * s * w.transpose())(0, 0));
            }
            total += p - b2 / p;
        }
        return std::clamp(total, 0.0, 1.0);
    }

  private:
    int n_;
    int r_;
    Eigen::RowVectorXd lambda_;
    std::array<Eigen::MatrixXcd, 3> s_;
};

} // namespace

DensityMatrix Ensemble::density() const {
    return DensityMatrix::mixture(weights, states);
}

Spectrum spectrum(const DensityMatrix &rho) {
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(rho.matrix());
    Spectrum out;
    for (Eigen::Index k = eig.eigenvalues().size() - 1; k >= 0; --k) {
        const double lam = eig.eigenvalues()(k);
        if (lam > kRankCut) {
            out.values.push_back(lam);
            out.vectors.emplace_back(eig.eigenvectors().col(k));
        }
    }
    return out;
}

int mixing_parameter_count(int ensemble_size, int rank) {
    int pairs = 0;
    for (int i = 0; i < rank; ++i) {
        pairs += ensemble_size - 1 - i;
    }
    return 2 * pairs + rank;
}

Eigen::MatrixXcd mixing_isometry(int ensemble_size, int rank, const Eigen::VectorXd &angles) {
    if (ensemble_size < rank || rank < 1) {
        throw Error("isometry needs 1 <= rank <= ensemble_size");
    }
    if (angles.size() != mixing_parameter_count(ensemble_size, rank)) {
        throw Error("expected " + std::to_string(mixing_parameter_count(ensemble_size, rank)) +
                    " mixing angles, got " + std::to_string(angles.size()));
    }
    Eigen::MatrixXcd v = Eigen::MatrixXcd::Zero(ensemble_size, rank);
    const Eigen::Index phases = angles.size() - rank;
    for (int k = 0; k < rank; ++k) {
        v(k, k) = std::polar(1.0, angles(phases + k));
    }
    // Inverse of the column-by-column Givens reduction of an isometry:
    // apply the last column's rotations first.
    std::vector<Eigen::Index> offset(static_cast<std::size_t>(rank));
    Eigen::Index at = 0;
    for (int i = 0; i < rank; ++i) {
        offset[static_cast<std::size_t>(i)] = at;
        at += 2 * (ensemble_size - 1 - i);
    }
    for (int i = rank - 1; i >= 0; --i) {
        for (int j = ensemble_size - 1; j > i; --j) {
            const Eigen::Index p = offset[static_cast<std::size_t>(i)] + 2 * (j - i - 1);
            givens(v, i, j, angles(p), angles(p + 1));
        }
    }
    return v;
}

Ensemble realize_ensemble(const DensityMatrix &rho, const MixingParams &mixing) {
    const Spectrum spec = spectrum(rho);
    const Eigen::MatrixXcd v = mixing_isometry(mixing.ensemble_size, spec.rank(), mixing.angles);
    Ensemble out;
    for (int j = 0; j < mixing.ensemble_size; ++j) {
        Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(rho.matrix().rows());
        for (int k = 0; k < spec.rank(); ++k) {
            psi += v(j, k) * std::sqrt(spec.values[static_cast<std::size_t>(k)]) *
                   spec.vectors[static_cast<std::size_t>(k)];
        }
        const double p = psi.squaredNorm();
        if (p < kMinWeight) {
            continue;
        }
        out.weights.push_back(p);
        out.states.push_back(
            PureState::normalized(std::vector<cplx>(psi.data(), psi.data() + psi.size())));
    }
    return out;
}

RoofResult mixed_single_qubit_ed(const DensityMatrix &rho, int qubit, const RoofConfig &cfg) {
    if (qubit < 0 || qubit >= rho.num_qubits()) {
        throw Error("qubit " + std::to_string(qubit) + " out of range");
    }
    const Spectrum spec = spectrum(rho);
    const int n = resolve_size(cfg, spec.rank());
    const int dim = mixing_parameter_count(n, spec.rank());
    const RoofObjective objective(spec, qubit, n);

    RoofResult res;
    res.ensemble_size = n;
    res.restarts = cfg.restarts;
    res.eigen_bound = objective(Eigen::VectorXd::Zero(dim));

    NelderMeadOptions opts;
    opts.max_iters = cfg.max_iters;
    opts.ftol = cfg.tol * 1e-3;
    opts.xtol = 1e-9;

    std::vector<double> best(static_cast<std::size_t>(cfg.restarts));
    std::vector<long> evals(static_cast<std::size_t>(cfg.restarts));
    const Objective f = [&objective](const Eigen::VectorXd &x) { return objective(x); };

#pragma omp parallel for schedule(dynamic)
    for (int r = 0; r < cfg.restarts; ++r) {
        Eigen::VectorXd x = Eigen::VectorXd::Zero(dim);
        if (r > 0) {
            Rng rng = make_rng(cfg.seed, static_cast<std::uint64_t>(qubit) * 65536 +
                                             static_cast<std::uint64_t>(r));
            std::uniform_real_distribution<double> angle(-kPi, kPi);
            for (Eigen::Index i = 0; i < dim; ++i) {
                x(i) = angle(rng);
            }
        }
        // Fresh simplices around the incumbent until a round stops paying.
        double value = f(x);
        long count = 1;
        double step = 0.5;
        for (int round = 0; round < 4; ++round) {
            const NelderMeadResult nm = nelder_mead(f, x, step, opts);
            count += nm.evaluations;
            const bool improved = nm.value < value - cfg.tol;
            if (nm.value < value) {
                x = nm.x;
                value = nm.value;
            }
            if (!improved) {
                break;
            }
            step *= 0.5;
        }
        best[static_cast<std::size_t>(r)] = value;
        evals[static_cast<std::size_t>(r)] = count;
    }

    const auto it = std::min_element(best.begin(), best.end());
    res.best_restart = static_cast<int>(std::distance(best.begin(), it));
    res.value = std::min(*it, res.eigen_bound);
    for (long e : evals) {
        res.evaluations += e;
    }
    return res;
}

MixedEdReport mixed_ed(const DensityMatrix &rho, const RoofConfig &cfg) {
    MixedEdReport out;
    for (int mu = 0; mu < rho.num_qubits(); ++mu) {
        out.per_qubit.push_back(mixed_single_qubit_ed(rho, mu, cfg));
        out.total += out.per_qubit.back().value;
    }
    return out;
}

} // namespace entdist
