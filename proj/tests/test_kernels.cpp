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

#include <doctest.h>

#include "entdist/kernels.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace entdist;

TEST_CASE("parallel kernels match the serial reference") {
    Rng rng = make_rng(55);
    for (int m : {1, 2, 5, 9, 12}) {
        const PureState psi = random_state(m, rng);
        const auto amps = psi.amplitudes();

        const auto bp = kernels::bloch_vectors(amps, m);
        const auto bs = kernels::serial::bloch_vectors(amps, m);
        for (int q = 0; q < m; ++q) {
            CHECK((bp[static_cast<std::size_t>(q)] - bs[static_cast<std::size_t>(q)]).norm() < 1e-12);
        }

        const auto frame = random_frame(m, rng);
        CHECK((kernels::frame_correlations(amps, m, frame) -
               kernels::serial::frame_correlations(amps, m, frame))
                  .cwiseAbs()
                  .maxCoeff() < 1e-12);

        const Mat2 u = haar_unitary_2(rng);
        std::vector<cplx> a(amps.begin(), amps.end());
        std::vector<cplx> b(amps.begin(), amps.end());
        const int q = m / 2;
        kernels::apply_single_qubit(a, m, q, u);
        kernels::serial::apply_single_qubit(b, m, q, u);
        double diff = 0.0;
        for (std::size_t k = 0; k < a.size(); ++k) {
            diff = std::max(diff, std::abs(a[k] - b[k]));
        }
        CHECK(diff < 1e-13);
    }
}

TEST_CASE("rotation to z") {
    Rng rng = make_rng(56);
    for (int t = 0; t < 50; ++t) {
        const Vec3 v = t == 0 ? Vec3(0, 0, -1) : t == 1 ? Vec3(0, 0, 1) : random_unit_vector(rng);
        const Mat2 u = kernels::rotation_to_z(v);
        CHECK((u * u.adjoint() - Mat2::Identity()).cwiseAbs().maxCoeff() < 1e-12);
        CHECK((u * pauli_axis_matrix(v) * u.adjoint() - pauli(3)).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("two-qubit reduced density matrix") {
    Rng rng = make_rng(57);
    const PureState psi = random_state(4, rng);
    const DensityMatrix rho = DensityMatrix::from_pure(psi);
    const auto dense = oracle::partial_trace(rho.matrix(), 4, {1, 3});
    CHECK((kernels::two_qubit_rdm(psi.amplitudes(), 4, 1, 3) - dense).cwiseAbs().maxCoeff() < 1e-12);
}
