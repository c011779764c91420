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

#include "entdist/fsmetric.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "entdist/kernels.hpp"

namespace entdist {

namespace {

void check_frame(const PureState &state, const UnitVectorFrame &frame) {
    if (frame.size() != state.num_qubits()) {
        throw Error("frame has " + std::to_string(frame.size()) +
                    " axes for a " + std::to_string(state.num_qubits()) +
                    "-qubit state");
    }
}

MetricTensor assemble(const std::vector<Vec3> &bloch,
                      const Eigen::MatrixXd &corr,
                      const UnitVectorFrame &frame) {
    const int m = frame.size();
    Eigen::VectorXd proj(m);
    for (int q = 0; q < m; ++q) {
        proj(q) = frame[q].dot(bloch[static_cast<std::size_t>(q)]);
    }
    MetricTensor g{Eigen::MatrixXd(m, m)};
    for (int a = 0; a < m; ++a) {
        g.entries(a, a) = 1.0 - proj(a) * proj(a);
        for (int b = a + 1; b < m; ++b) {
            const double v = corr(a, b) - proj(a) * proj(b);
            g.entries(a, b) = v;
            g.entries(b, a) = v;
        }
    }
    return g;
}

} // namespace

UnitVectorFrame::UnitVectorFrame(std::vector<Vec3> vectors)
    : vectors_(std::move(vectors)) {
    for (const auto &v : vectors_) {
        require_unit_axis(v);
    }
}

UnitVectorFrame UnitVectorFrame::uniform(int num_qubits, const Vec3 &axis) {
    return UnitVectorFrame(std::vector<Vec3>(static_cast<std::size_t>(num_qubits), axis));
}

MetricTensor metric_tensor(const PureState &state, const UnitVectorFrame &frame) {
    check_frame(state, frame);
    const auto bloch = kernels::bloch_vectors(state.amplitudes(), state.num_qubits());
    const auto corr = kernels::frame_correlations(state.amplitudes(),
                                                  state.num_qubits(), frame.vectors());
    return assemble(bloch, corr, frame);
}

MetricTensor metric_tensor_reference(const PureState &state,
                                     const UnitVectorFrame &frame) {
    check_frame(state, frame);
    const auto bloch =
        kernels::serial::bloch_vectors(state.amplitudes(), state.num_qubits());
    const auto corr = kernels::serial::frame_correlations(
        state.amplitudes(), state.num_qubits(), frame.vectors());
    return assemble(bloch, corr, frame);
}

double metric_trace(const PureState &state, const UnitVectorFrame &frame) {
    check_frame(state, frame);
    const auto bloch = kernels::bloch_vectors(state.amplitudes(), state.num_qubits());
    double tr = 0.0;
    for (int q = 0; q < frame.size(); ++q) {
        const double p = frame[q].dot(bloch[static_cast<std::size_t>(q)]);
        tr += 1.0 - p * p;
    }
    return tr;
}

namespace {

OptimalFrame frame_from_bloch(const std::vector<Vec3> &bloch) {
    std::vector<Vec3> axes;
    std::vector<int> degenerate;
    for (std::size_t q = 0; q < bloch.size(); ++q) {
        const double n = bloch[q].norm();
        if (n > tol::kDegenerate) {
            axes.push_back(bloch[q] / n);
        } else {
            axes.emplace_back(0.0, 0.0, 1.0);
            degenerate.push_back(static_cast<int>(q));
        }
    }
    // Renormalize to absorb rounding in the division.
    for (auto &v : axes) {
        v.normalize();
    }
    return {UnitVectorFrame(std::move(axes)), std::move(degenerate)};
}

} // namespace

OptimalFrame optimal_frame(const PureState &state) {
    return frame_from_bloch(kernels::bloch_vectors(state.amplitudes(), state.num_qubits()));
}

EdReport entanglement_distance(const PureState &state) {
    const auto bloch = kernels::bloch_vectors(state.amplitudes(), state.num_qubits());
    EdReport report;
    for (const auto &b : bloch) {
        report.per_qubit.push_back(std::max(0.0, 1.0 - b.squaredNorm()));
    }
    report.total = std::accumulate(report.per_qubit.begin(), report.per_qubit.end(), 0.0);
    auto opt = frame_from_bloch(bloch);
    const auto corr = kernels::frame_correlations(state.amplitudes(), state.num_qubits(),
                                                  opt.frame.vectors());
    report.em = assemble(bloch, corr, opt.frame);
    report.frame = std::move(opt.frame);
    report.degenerate_qubits = std::move(opt.degenerate);
    return report;
}

double entanglement_distance_value(const PureState &state) {
    const auto bloch = kernels::bloch_vectors(state.amplitudes(), state.num_qubits());
    double e = 0.0;
    for (const auto &b : bloch) {
        e += std::max(0.0, 1.0 - b.squaredNorm());
    }
    return e;
}

double single_qubit_ed_via_purity(const PureState &state, int qubit) {
    const auto rho = partial_trace(state, {qubit});
    return 2.0 * (1.0 - rho.purity());
}

double conjugate_distance_sum(const PureState &state, const UnitVectorFrame &frame) {
    check_frame(state, frame);
    double s = 0.0;
    for (int q = 0; q < frame.size(); ++q) {
        s += fs_distance_sq(state, apply_pauli_axis(state, q, frame[q]));
    }
    return s;
}

double concurrence_2q(const PureState &state) {
    if (state.num_qubits() != 2) {
        throw Error("concurrence_2q needs a two-qubit state");
    }
    return std::min(1.0, 2.0 * std::abs(state[0] * state[3] - state[1] * state[2]));
}

std::vector<std::vector<int>> block_structure(const MetricTensor &em, double tol) {
    if (!(tol > 0.0)) {
        throw Error("block_structure tolerance must be positive");
    }
    const int m = em.size();
    std::vector<int> parent(static_cast<std::size_t>(m));
    std::iota(parent.begin(), parent.end(), 0);
    const auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            x = parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        }
        return x;
    };
    for (int a = 0; a < m; ++a) {
        for (int b = a + 1; b < m; ++b) {
            if (std::abs(em.entries(a, b)) > tol) {
                const int ra = find(a);
                const int rb = find(b);
                parent[static_cast<std::size_t>(std::max(ra, rb))] = std::min(ra, rb);
            }
        }
    }
    std::vector<std::vector<int>> blocks;
    std::vector<int> slot(static_cast<std::size_t>(m), -1);
    for (int q = 0; q < m; ++q) {
        const int r = find(q);
        if (slot[static_cast<std::size_t>(r)] < 0) {
            slot[static_cast<std::size_t>(r)] = static_cast<int>(blocks.size());
            blocks.emplace_back();
        }
        blocks[static_cast<std::size_t>(slot[static_cast<std::size_t>(r)])].push_back(q);
    }
    return blocks;
}

} // namespace entdist
