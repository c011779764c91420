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

#include "entdist/qstate.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "entdist/kernels.hpp"

namespace entdist {

namespace {

constexpr int kMaxQubits = 30;

int qubits_for_dim(std::size_t dim) {
    if (dim < 2 || !std::has_single_bit(dim)) {
        throw Error("amplitude count must be a power of two >= 2, got " +
                    std::to_string(dim));
    }
    const int m = std::countr_zero(dim);
    if (m > kMaxQubits) {
        throw Error("too many qubits: " + std::to_string(m));
    }
    return m;
}

double squared_norm(std::span<const cplx> v) {
    double s = 0.0;
    for (const auto &a : v) {
        s += std::norm(a);
    }
    return s;
}

void check_qubit(int qubit, int num_qubits) {
    if (qubit < 0 || qubit >= num_qubits) {
        throw Error("qubit index " + std::to_string(qubit) +
                    " out of range for " + std::to_string(num_qubits) +
                    " qubits");
    }
}

} // namespace

PureState::PureState(std::vector<cplx> amplitudes, double tolerance)
    : num_qubits_(qubits_for_dim(amplitudes.size())),
      amps_(std::move(amplitudes)) {
    const double n2 = squared_norm(amps_);
    if (!std::isfinite(n2) || std::abs(n2 - 1.0) > tolerance) {
        throw Error("state is not normalized: squared norm " +
                    std::to_string(n2));
    }
}

PureState PureState::normalized(std::vector<cplx> amplitudes) {
    const double n = std::sqrt(squared_norm(amplitudes));
    if (!(n > 0.0) || !std::isfinite(n)) {
        throw Error("cannot normalize a zero or non-finite vector");
    }
    for (auto &a : amplitudes) {
        a /= n;
    }
    return PureState(std::move(amplitudes));
}

PureState PureState::basis(int num_qubits, std::size_t k) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw Error("invalid qubit count");
    }
    std::vector<cplx> amps(dim_of(num_qubits));
    if (k >= amps.size()) {
        throw Error("basis index out of range");
    }
    amps[k] = 1.0;
    return PureState(std::move(amps));
}

DensityMatrix::DensityMatrix(Eigen::MatrixXcd matrix) : rho_(std::move(matrix)) {
    if (rho_.rows() != rho_.cols()) {
        throw Error("density matrix must be square");
    }
    num_qubits_ = qubits_for_dim(static_cast<std::size_t>(rho_.rows()));
    if ((rho_ - rho_.adjoint()).cwiseAbs().maxCoeff() > tol::kNorm) {
        throw Error("density matrix is not Hermitian");
    }
    const cplx tr = rho_.trace();
    if (std::abs(tr - 1.0) > tol::kNorm) {
        throw Error("density matrix trace is " + std::to_string(tr.real()));
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho_, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -tol::kPsdSlack) {
        throw Error("density matrix has a negative eigenvalue");
    }
}

DensityMatrix DensityMatrix::from_pure(const PureState &state) {
    const auto a = state.amplitudes();
    Eigen::Map<const Eigen::VectorXcd> v(a.data(), static_cast<Eigen::Index>(a.size()));
    Eigen::MatrixXcd rho = v * v.adjoint();
    return DensityMatrix(std::move(rho));
}

DensityMatrix DensityMatrix::mixture(std::span<const double> weights,
                                     std::span<const PureState> states) {
    if (weights.size() != states.size() || states.empty()) {
        throw Error("mixture needs one weight per state");
    }
    const auto n = static_cast<Eigen::Index>(states.front().dim());
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(n, n);
    for (std::size_t j = 0; j < states.size(); ++j) {
        if (weights[j] < 0.0) {
            throw Error("negative mixture weight");
        }
        const auto a = states[j].amplitudes();
        if (static_cast<Eigen::Index>(a.size()) != n) {
            throw Error("mixture members differ in dimension");
        }
        Eigen::Map<const Eigen::VectorXcd> v(a.data(), n);
        rho += weights[j] * (v * v.adjoint());
    }
    return DensityMatrix(std::move(rho));
}

double DensityMatrix::purity() const {
    return (rho_ * rho_).trace().real();
}

Mat2 pauli(int i) {
    Mat2 m;
    switch (i) {
    case 0:
        m << 1, 0, 0, 1;
        break;
    case 1:
        m << 0, 1, 1, 0;
        break;
    case 2:
        m << 0, cplx(0, -1), cplx(0, 1), 0;
        break;
    case 3:
        m << 1, 0, 0, -1;
        break;
    default:
        throw Error("pauli index must be 0..3");
    }
    return m;
}

void require_unit_axis(const Vec3 &axis) {
    if (!axis.allFinite() || std::abs(axis.norm() - 1.0) > tol::kUnitAxis) {
        throw Error("axis is not a unit vector");
    }
}

Mat2 pauli_axis_matrix(const Vec3 &axis) {
    return axis.x() * pauli(1) + axis.y() * pauli(2) + axis.z() * pauli(3);
}

PureState tensor_product(std::span<const PureState> factors) {
    if (factors.empty()) {
        throw Error("tensor_product needs at least one factor");
    }
    std::vector<cplx> acc{1.0};
    for (const auto &f : factors) {
        if (std::abs(squared_norm(f.amplitudes()) - 1.0) > tol::kNorm) {
            throw Error("tensor_product factor is not normalized");
        }
        // The new factor occupies the higher-order bits.
        std::vector<cplx> next(acc.size() * f.dim());
        for (std::size_t hi = 0; hi < f.dim(); ++hi) {
            for (std::size_t lo = 0; lo < acc.size(); ++lo) {
                next[hi * acc.size() + lo] = f[hi] * acc[lo];
            }
        }
        acc = std::move(next);
    }
    return PureState(std::move(acc));
}

PureState apply_pauli_axis(const PureState &state, int qubit, const Vec3 &axis) {
    check_qubit(qubit, state.num_qubits());
    require_unit_axis(axis);
    std::vector<cplx> out(state.amplitudes().begin(), state.amplitudes().end());
    kernels::apply_single_qubit(out, state.num_qubits(), qubit,
                                pauli_axis_matrix(axis));
    return PureState(std::move(out), 1e-10);
}

PureState apply_local(const PureState &state, int qubit, const Mat2 &op) {
    check_qubit(qubit, state.num_qubits());
    std::vector<cplx> out(state.amplitudes().begin(), state.amplitudes().end());
    kernels::apply_single_qubit(out, state.num_qubits(), qubit, op);
    return PureState::normalized(std::move(out));
}

BlochVector bloch_vector(const PureState &state, int qubit) {
    check_qubit(qubit, state.num_qubits());
    const std::size_t bit = std::size_t{1} << qubit;
    const auto a = state.amplitudes();
    cplx s = 0.0;
    double z = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        if ((k & bit) != 0) {
            continue;
        }
        s += std::conj(a[k]) * a[k | bit];
        z += std::norm(a[k]) - std::norm(a[k | bit]);
    }
    return {Vec3(2.0 * s.real(), 2.0 * s.imag(), z)};
}

double correlator(const PureState &state, int qubit_a, const Vec3 &axis_a,
                  int qubit_b, const Vec3 &axis_b) {
    const int m = state.num_qubits();
    check_qubit(qubit_a, m);
    check_qubit(qubit_b, m);
    if (qubit_a == qubit_b) {
        throw Error("correlator needs two distinct qubits");
    }
    require_unit_axis(axis_a);
    require_unit_axis(axis_b);
    const Eigen::Matrix4cd rho =
        kernels::two_qubit_rdm(state.amplitudes(), m, qubit_a, qubit_b);
    // Local basis index r = bit_a + 2 bit_b, so the operator is B (x) A.
    Eigen::Matrix4cd op;
    const Mat2 a = pauli_axis_matrix(axis_a);
    const Mat2 b = pauli_axis_matrix(axis_b);
    for (int r = 0; r < 4; ++r) {
        for (int s = 0; s < 4; ++s) {
            op(r, s) = b(r >> 1, s >> 1) * a(r & 1, s & 1);
        }
    }
    return (rho * op).trace().real();
}

DensityMatrix partial_trace(const DensityMatrix &rho, std::vector<int> keep) {
    const int m = rho.num_qubits();
    if (keep.empty()) {
        throw Error("partial_trace needs a non-empty keep set");
    }
    std::sort(keep.begin(), keep.end());
    if (std::adjacent_find(keep.begin(), keep.end()) != keep.end()) {
        throw Error("partial_trace keep set has duplicates");
    }
    for (int q : keep) {
        check_qubit(q, m);
    }
    std::vector<int> traced;
    for (int q = 0; q < m; ++q) {
        if (!std::binary_search(keep.begin(), keep.end(), q)) {
            traced.push_back(q);
        }
    }
    const auto compose = [](std::size_t local, const std::vector<int> &qubits) {
        std::size_t k = 0;
        for (std::size_t i = 0; i < qubits.size(); ++i) {
            if ((local >> i) & 1U) {
                k |= std::size_t{1} << qubits[i];
            }
        }
        return k;
    };
    const std::size_t dk = std::size_t{1} << keep.size();
    const std::size_t dt = std::size_t{1} << traced.size();
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dk),
                                                  static_cast<Eigen::Index>(dk));
    const auto &full = rho.matrix();
    for (std::size_t t = 0; t < dt; ++t) {
        const std::size_t kt = compose(t, traced);
        for (std::size_t r = 0; r < dk; ++r) {
            const std::size_t kr = compose(r, keep) | kt;
            for (std::size_t s = 0; s < dk; ++s) {
                const std::size_t ks = compose(s, keep) | kt;
                out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(s)) +=
                    full(static_cast<Eigen::Index>(kr), static_cast<Eigen::Index>(ks));
            }
        }
    }
    out = 0.5 * (out + out.adjoint()).eval();
    return DensityMatrix(std::move(out));
}

DensityMatrix partial_trace(const PureState &state, std::vector<int> keep) {
    const int m = state.num_qubits();
    if (keep.empty()) {
        throw Error("partial_trace needs a non-empty keep set");
    }
    std::sort(keep.begin(), keep.end());
    if (std::adjacent_find(keep.begin(), keep.end()) != keep.end()) {
        throw Error("partial_trace keep set has duplicates");
    }
    for (int q : keep) {
        check_qubit(q, m);
    }
    const std::size_t dk = std::size_t{1} << keep.size();
    const auto a = state.amplitudes();
    // Reshape amplitudes into a dk x dt matrix X; rho = X X^dagger.
    const std::size_t dt = a.size() / dk;
    Eigen::MatrixXcd x(static_cast<Eigen::Index>(dk), static_cast<Eigen::Index>(dt));
    for (std::size_t k = 0; k < a.size(); ++k) {
        std::size_t r = 0;
        std::size_t t = 0;
        int ti = 0;
        std::size_t ki = 0;
        for (int q = 0; q < m; ++q) {
            const std::size_t bit = (k >> q) & 1U;
            if (ki < keep.size() && keep[ki] == q) {
                r |= bit << ki;
                ++ki;
            } else {
                t |= bit << ti;
                ++ti;
            }
        }
        x(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(t)) = a[k];
    }
    Eigen::MatrixXcd rho = x * x.adjoint();
    rho = 0.5 * (rho + rho.adjoint()).eval();
    rho /= rho.trace().real();
    return DensityMatrix(std::move(rho));
}

double fs_distance_sq(const PureState &a, const PureState &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw Error("fs_distance_sq: qubit counts differ");
    }
    cplx overlap = 0.0;
    const auto x = a.amplitudes();
    const auto y = b.amplitudes();
    for (std::size_t k = 0; k < x.size(); ++k) {
        overlap += std::conj(x[k]) * y[k];
    }
    return std::clamp(1.0 - std::norm(overlap), 0.0, 1.0);
}

} // namespace entdist
