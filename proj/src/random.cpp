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

#include "entdist/random.hpp"

#include <cmath>

#include "entdist/kernels.hpp"

namespace entdist {

Rng make_rng(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed),
                      static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream),
                      static_cast<std::uint32_t>(stream >> 32), 0x9e3779b9U};
    return Rng(seq);
}

PureState random_state(int num_qubits, Rng &rng) {
    std::normal_distribution<double> normal;
    std::vector<cplx> amps(dim_of(num_qubits));
    for (auto &a : amps) {
        const double re = normal(rng);
        a = cplx(re, normal(rng));
    }
    return PureState::normalized(std::move(amps));
}

Vec3 random_unit_vector(Rng &rng) {
    std::normal_distribution<double> normal;
    Vec3 v;
    do {
        v = Vec3(normal(rng), normal(rng), normal(rng));
    } while (v.norm() < 1e-6);
    return v.normalized();
}

std::vector<Vec3> random_frame(int num_qubits, Rng &rng) {
    std::vector<Vec3> frame;
    frame.reserve(static_cast<std::size_t>(num_qubits));
    for (int q = 0; q < num_qubits; ++q) {
        frame.push_back(random_unit_vector(rng));
    }
    return frame;
}

Mat2 haar_unitary_2(Rng &rng) {
    std::normal_distribution<double> normal;
    Mat2 g;
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            const double re = normal(rng);
            g(r, c) = cplx(re, normal(rng));
        }
    }
    Eigen::HouseholderQR<Mat2> qr(g);
    Mat2 q = qr.householderQ();
    const Mat2 r = qr.matrixQR().triangularView<Eigen::Upper>();
    // Fix the phase ambiguity so the distribution is Haar.
    for (int c = 0; c < 2; ++c) {
        const cplx d = r(c, c);
        q.col(c) *= d / std::abs(d);
    }
    return q;
}

std::vector<Mat2> random_local_unitary(int num_qubits, Rng &rng) {
    std::vector<Mat2> us;
    for (int q = 0; q < num_qubits; ++q) {
        us.push_back(haar_unitary_2(rng));
    }
    return us;
}

PureState apply_local_unitary(const PureState &state,
                              const std::vector<Mat2> &unitaries) {
    if (static_cast<int>(unitaries.size()) != state.num_qubits()) {
        throw Error("one unitary per qubit required");
    }
    std::vector<cplx> amps(state.amplitudes().begin(), state.amplitudes().end());
    for (int q = 0; q < state.num_qubits(); ++q) {
        kernels::apply_single_qubit(amps, state.num_qubits(), q,
                                    unitaries[static_cast<std::size_t>(q)]);
    }
    return PureState::normalized(std::move(amps));
}

Eigen::MatrixXcd local_unitary_matrix(const std::vector<Mat2> &unitaries) {
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(1, 1);
    for (const auto &f : unitaries) {
        // Higher qubits take the higher-order (outer) Kronecker slot.
        Eigen::MatrixXcd next(u.rows() * 2, u.cols() * 2);
        for (int r = 0; r < 2; ++r) {
            for (int c = 0; c < 2; ++c) {
                next.block(r * u.rows(), c * u.cols(), u.rows(), u.cols()) = f(r, c) * u;
            }
        }
        u = std::move(next);
    }
    return u;
}

DensityMatrix random_density_matrix(int num_qubits, int rank, Rng &rng) {
    if (rank < 1) {
        throw Error("rank must be positive");
    }
    std::exponential_distribution<double> expo(1.0);
    std::vector<double> w(static_cast<std::size_t>(rank));
    double total = 0.0;
    for (auto &x : w) {
        x = expo(rng);
        total += x;
    }
    std::vector<PureState> states;
    for (auto &x : w) {
        x /= total;
        states.push_back(random_state(num_qubits, rng));
    }
    return DensityMatrix::mixture(w, states);
}

} // namespace entdist
