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

#include "entdist/kernels.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace entdist::kernels {

namespace {

// Index of the pair member with bit `q` cleared, for pair number k.
inline std::size_t insert_zero_bit(std::size_t k, int q) {
    const std::size_t low = k & ((std::size_t{1} << q) - 1);
    return ((k >> q) << (q + 1)) | low;
}

inline std::ptrdiff_t as_signed(std::size_t n) {
    return static_cast<std::ptrdiff_t>(n);
}

Mat2 axis_matrix(const Vec3 &v) {
    Mat2 m;
    m << cplx(v.z(), 0.0), cplx(v.x(), -v.y()), cplx(v.x(), v.y()),
        cplx(-v.z(), 0.0);
    return m;
}

} // namespace

Mat2 rotation_to_z(const Vec3 &axis) {
    // |+v> = (a, b); rows of U are <+v| and <-v| with |-v> = (-b*, a*).
    cplx a;
    cplx b;
    if (axis.z() > -0.5) {
        const double s = std::sqrt(2.0 * (1.0 + axis.z()));
        a = cplx(1.0 + axis.z(), 0.0) / s;
        b = cplx(axis.x(), axis.y()) / s;
    } else {
        const double s = std::sqrt(2.0 * (1.0 - axis.z()));
        a = cplx(axis.x(), -axis.y()) / s;
        b = cplx(1.0 - axis.z(), 0.0) / s;
    }
    Mat2 u;
    u << std::conj(a), std::conj(b), -b, a;
    return u;
}

std::vector<Vec3> bloch_vectors(std::span<const cplx> amps, int num_qubits) {
    std::vector<Vec3> out(static_cast<std::size_t>(num_qubits));
    const std::size_t half = amps.size() / 2;
    for (int q = 0; q < num_qubits; ++q) {
        const std::size_t bit = std::size_t{1} << q;
        double re = 0.0;
        double im = 0.0;
        double z = 0.0;
#pragma omp parallel for reduction(+ : re, im, z) schedule(static)
        for (std::ptrdiff_t k = 0; k < as_signed(half); ++k) {
            const std::size_t i0 = insert_zero_bit(static_cast<std::size_t>(k), q);
            const cplx a0 = amps[i0];
            const cplx a1 = amps[i0 | bit];
            const cplx s = std::conj(a0) * a1;
            re += s.real();
            im += s.imag();
            z += std::norm(a0) - std::norm(a1);
        }
        out[static_cast<std::size_t>(q)] = Vec3(2.0 * re, 2.0 * im, z);
    }
    return out;
}

void apply_single_qubit(std::span<cplx> amps, int /*num_qubits*/, int qubit,
                        const Mat2 &op) {
    const std::size_t half = amps.size() / 2;
    const std::size_t bit = std::size_t{1} << qubit;
    const cplx m00 = op(0, 0), m01 = op(0, 1), m10 = op(1, 0), m11 = op(1, 1);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t k = 0; k < as_signed(half); ++k) {
        const std::size_t i0 = insert_zero_bit(static_cast<std::size_t>(k), qubit);
        const cplx a0 = amps[i0];
        const cplx a1 = amps[i0 | bit];
        amps[i0] = m00 * a0 + m01 * a1;
        amps[i0 | bit] = m10 * a0 + m11 * a1;
    }
}

Eigen::MatrixXd frame_correlations(std::span<const cplx> amps, int num_qubits,
                                   std::span<const Vec3> frame) {
    std::vector<cplx> rotated(amps.begin(), amps.end());
    for (int q = 0; q < num_qubits; ++q) {
        const Vec3 &v = frame[static_cast<std::size_t>(q)];
        if (v.z() == 1.0) {
            continue;
        }
        apply_single_qubit(rotated, num_qubits, q, rotation_to_z(v));
    }
    const std::size_t dim = rotated.size();
    std::vector<double> prob(dim);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t k = 0; k < as_signed(dim); ++k) {
        prob[static_cast<std::size_t>(k)] = std::norm(rotated[static_cast<std::size_t>(k)]);
    }
    rotated.clear();
    rotated.shrink_to_fit();

    const int m = num_qubits;
    const int pairs = m * (m - 1) / 2;
    Eigen::MatrixXd c = Eigen::MatrixXd::Identity(m, m);
#pragma omp parallel for schedule(dynamic)
    for (int p = 0; p < pairs; ++p) {
        // Unrank p into (a, b), a < b.
        int a = 0;
        int rem = p;
        while (rem >= m - 1 - a) {
            rem -= m - 1 - a;
            ++a;
        }
        const int b = a + 1 + rem;
        double acc = 0.0;
        for (std::size_t k = 0; k < dim; ++k) {
            const bool odd = (((k >> a) ^ (k >> b)) & 1U) != 0;
            acc += odd ? -prob[k] : prob[k];
        }
        c(a, b) = acc;
        c(b, a) = acc;
    }
    return c;
}

Eigen::Matrix4cd two_qubit_rdm(std::span<const cplx> amps, int num_qubits,
                               int a, int b) {
    const int lo = std::min(a, b);
    const int hi = std::max(a, b);
    const std::size_t groups = amps.size() / 4;
    const std::size_t bit_a = std::size_t{1} << a;
    const std::size_t bit_b = std::size_t{1} << b;
    Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
    (void)num_qubits;
    for (std::size_t g = 0; g < groups; ++g) {
        const std::size_t base = insert_zero_bit(insert_zero_bit(g, lo), hi);
        const std::array<cplx, 4> v = {amps[base], amps[base | bit_a],
                                       amps[base | bit_b],
                                       amps[base | bit_a | bit_b]};
        for (int r = 0; r < 4; ++r) {
            for (int s = 0; s < 4; ++s) {
                rho(r, s) += v[static_cast<std::size_t>(r)] *
                             std::conj(v[static_cast<std::size_t>(s)]);
            }
        }
    }
    return rho;
}

namespace serial {

void apply_single_qubit(std::span<cplx> amps, int /*num_qubits*/, int qubit,
                        const Mat2 &op) {
    const std::size_t bit = std::size_t{1} << qubit;
    for (std::size_t k = 0; k < amps.size(); ++k) {
        if ((k & bit) != 0) {
            continue;
        }
        const cplx a0 = amps[k];
        const cplx a1 = amps[k | bit];
        amps[k] = op(0, 0) * a0 + op(0, 1) * a1;
        amps[k | bit] = op(1, 0) * a0 + op(1, 1) * a1;
    }
}

std::vector<Vec3> bloch_vectors(std::span<const cplx> amps, int num_qubits) {
    std::vector<Vec3> out;
    std::vector<cplx> work(amps.size());
    for (int q = 0; q < num_qubits; ++q) {
        Vec3 b;
        for (int i = 0; i < 3; ++i) {
            Vec3 axis = Vec3::Zero();
            axis[i] = 1.0;
            std::copy(amps.begin(), amps.end(), work.begin());
            apply_single_qubit(work, num_qubits, q, axis_matrix(axis));
            cplx ev = 0.0;
            for (std::size_t k = 0; k < amps.size(); ++k) {
                ev += std::conj(amps[k]) * work[k];
            }
            b[i] = ev.real();
        }
        out.push_back(b);
    }
    return out;
}

Eigen::MatrixXd frame_correlations(std::span<const cplx> amps, int num_qubits,
                                   std::span<const Vec3> frame) {
    const int m = num_qubits;
    Eigen::MatrixXd c = Eigen::MatrixXd::Identity(m, m);
    std::vector<cplx> work(amps.size());
    for (int a = 0; a < m; ++a) {
        for (int b = a + 1; b < m; ++b) {
            std::copy(amps.begin(), amps.end(), work.begin());
            apply_single_qubit(work, m, b, axis_matrix(frame[static_cast<std::size_t>(b)]));
            apply_single_qubit(work, m, a, axis_matrix(frame[static_cast<std::size_t>(a)]));
            cplx ev = 0.0;
            for (std::size_t k = 0; k < amps.size(); ++k) {
                ev += std::conj(amps[k]) * work[k];
            }
            c(a, b) = ev.real();
            c(b, a) = ev.real();
        }
    }
    return c;
}

} // namespace serial

} // namespace entdist::kernels
