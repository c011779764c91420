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

#include "entdist/families.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace entdist;
using namespace testutil;

TEST_CASE("pure state construction validates norm and dimension") {
    CHECK_THROWS_AS(PureState({1.0, 0.0, 0.0}), Error);
    CHECK_THROWS_AS(PureState({1.0, 1.0}), Error);
    CHECK_THROWS_AS(PureState(std::vector<cplx>{}), Error);
    CHECK_THROWS_AS((void)PureState::normalized({0.0, 0.0}), Error);
    const PureState s = PureState::basis(3, 5);
    CHECK(s.num_qubits() == 3);
    CHECK(s[5] == cplx(1.0));
}

TEST_CASE("tensor product places factor 0 on the low bits") {
    const PureState z = product({zero(), zero()});
    CHECK(z[0] == cplx(1.0));
    CHECK(std::abs(z[1]) + std::abs(z[2]) + std::abs(z[3]) == 0.0);

    const PureState x = product({one(), zero()});
    CHECK(std::abs(x[1] - 1.0) < 1e-15);

    const PureState pp = product({plus(), plus()});
    for (std::size_t k = 0; k < 4; ++k) {
        CHECK(std::abs(pp[k] - 0.5) < 1e-15);
    }
    CHECK_THROWS_AS((void)tensor_product(std::span<const PureState>{}), Error);
}

TEST_CASE("pauli axis action") {
    const PureState z = apply_pauli_axis(zero(), 0, Vec3(0, 0, 1));
    CHECK(fs_distance_sq(z, zero()) < 1e-15);
    const PureState x = apply_pauli_axis(zero(), 0, Vec3(1, 0, 0));
    CHECK(std::abs(x[1] - 1.0) < 1e-15);
    CHECK_THROWS_AS((void)apply_pauli_axis(zero(), 0, Vec3(1, 1, 0)), Error);
    CHECK_THROWS_AS((void)apply_pauli_axis(zero(), 1, Vec3(1, 0, 0)), Error);

    Rng rng = make_rng(11);
    for (int t = 0; t < 20; ++t) {
        const int m = 1 + t % 4;
        const PureState psi = random_state(m, rng);
        const Vec3 v = random_unit_vector(rng);
        const int q = t % m;
        const PureState once = apply_pauli_axis(psi, q, v);
        const PureState twice = apply_pauli_axis(once, q, v);
        double diff = 0.0;
        double norm = 0.0;
        for (std::size_t k = 0; k < psi.dim(); ++k) {
            diff = std::max(diff, std::abs(twice[k] - psi[k]));
            norm += std::norm(once[k]);
        }
        CHECK(diff < 1e-12);
        CHECK(std::abs(norm - 1.0) < 1e-12);
        // Dense oracle for the single application.
        const oracle::Vec ref =
            oracle::embed(m, {{q, oracle::axis_op(v)}}) * oracle::vec(psi);
        CHECK((ref - oracle::vec(once)).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("bloch vectors") {
    CHECK((bloch_vector(zero(), 0).components - Vec3(0, 0, 1)).norm() < 1e-15);
    CHECK(bloch_vector(bell(), 0).norm() < 1e-15);
    CHECK(bloch_vector(bell(), 1).norm() < 1e-15);
    for (double theta : {0.1, 0.4, 0.9, 1.3}) {
        const PureState g = ghzl_state(4, theta);
        for (int q = 0; q < 4; ++q) {
            const Vec3 dense = oracle::bloch(oracle::vec(g), 4, q);
            CHECK((bloch_vector(g, q).components - dense).norm() < 1e-12);
            CHECK((dense - Vec3(0, 0, std::cos(2 * theta))).norm() < 1e-12);
        }
    }
    Rng rng = make_rng(5);
    for (int t = 0; t < 10; ++t) {
        const PureState psi = random_state(3, rng);
        for (int q = 0; q < 3; ++q) {
            const Vec3 b = bloch_vector(psi, q).components;
            CHECK((b - oracle::bloch(oracle::vec(psi), 3, q)).norm() < 1e-12);
            CHECK(b.norm() <= 1.0 + 1e-12);
        }
    }
}

TEST_CASE("two-qubit correlators") {
    CHECK(std::abs(correlator(bell(), 0, Vec3::UnitZ(), 1, Vec3::UnitZ()) - 1.0) < 1e-12);
    CHECK(std::abs(correlator(ghzl_state(2, kPi / 4), 0, Vec3::UnitZ(), 1, Vec3::UnitZ()) - 1.0) <
          1e-12);
    CHECK_THROWS_AS((void)correlator(bell(), 0, Vec3::UnitZ(), 0, Vec3::UnitZ()), Error);

    Rng rng = make_rng(21);
    const PureState a = random_state(1, rng);
    const PureState b = random_state(1, rng);
    const PureState ab = product({a, b});
    const Vec3 va = random_unit_vector(rng);
    const Vec3 vb = random_unit_vector(rng);
    const double lhs = correlator(ab, 0, va, 1, vb);
    const double rhs = va.dot(bloch_vector(a, 0).components) * vb.dot(bloch_vector(b, 0).components);
    CHECK(std::abs(lhs - rhs) < 1e-12);

    for (int t = 0; t < 10; ++t) {
        const PureState psi = random_state(4, rng);
        const Vec3 u = random_unit_vector(rng);
        const Vec3 w = random_unit_vector(rng);
        const double dense = oracle::expectation(oracle::vec(psi),
                                                 oracle::embed(4, {{1, oracle::axis_op(u)},
                                                                   {3, oracle::axis_op(w)}}))
                                 .real();
        CHECK(std::abs(correlator(psi, 1, u, 3, w) - dense) < 1e-12);
        CHECK(std::abs(correlator(psi, 3, w, 1, u) - dense) < 1e-12);
    }
}

TEST_CASE("partial traces") {
    Rng rng = make_rng(3);
    const PureState prod = product({random_state(1, rng), random_state(1, rng)});
    CHECK(std::abs(partial_trace(prod, {0}).purity() - 1.0) < 1e-12);

    const DensityMatrix half = partial_trace(DensityMatrix::from_pure(bell()), {1});
    CHECK((half.matrix() - 0.5 * Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() < 1e-15);
    CHECK_THROWS_AS((void)partial_trace(DensityMatrix::from_pure(bell()), {}), Error);
    CHECK_THROWS_AS((void)partial_trace(bell(), {2}), Error);

    for (int t = 0; t < 10; ++t) {
        const PureState psi = random_state(4, rng);
        const DensityMatrix rho = DensityMatrix::from_pure(psi);
        const std::vector<int> keep = t % 2 ? std::vector<int>{0, 2} : std::vector<int>{1, 2, 3};
        const auto dense = oracle::partial_trace(rho.matrix(), 4, keep);
        CHECK((partial_trace(rho, keep).matrix() - dense).cwiseAbs().maxCoeff() < 1e-12);
        CHECK((partial_trace(psi, keep).matrix() - dense).cwiseAbs().maxCoeff() < 1e-12);
        CHECK(std::abs(partial_trace(psi, keep).matrix().trace() - 1.0) < 1e-12);

        // Single-qubit marginal is (I + b.sigma)/2.
        const Vec3 b = bloch_vector(psi, 2).components;
        Eigen::Matrix2cd expect = 0.5 * Eigen::Matrix2cd::Identity();
        for (int a = 0; a < 3; ++a) {
            expect += 0.5 * b(a) * pauli(a + 1);
        }
        CHECK((partial_trace(psi, {2}).matrix() - expect).cwiseAbs().maxCoeff() < 1e-12);
        // |b| = sqrt(2 Tr rho^2 - 1)
        CHECK(std::abs(b.norm() - std::sqrt(2 * partial_trace(psi, {2}).purity() - 1)) < 1e-10);
    }

    const DensityMatrix mixed = random_density_matrix(3, 3, rng);
    CHECK(std::abs(partial_trace(mixed, {0, 1}).matrix().trace() - 1.0) < 1e-12);
}

TEST_CASE("density matrix validation") {
    Eigen::Matrix2cd m;
    m << 0.5, 0.1, 0.2, 0.5;
    CHECK_THROWS_AS(DensityMatrix{m}, Error);
    m << 0.6, 0.0, 0.0, 0.5;
    CHECK_THROWS_AS(DensityMatrix{m}, Error);
    m << 1.5, 0.0, 0.0, -0.5;
    CHECK_THROWS_AS(DensityMatrix{m}, Error);
    m << 0.5, 0.5, 0.5, 0.5;
    CHECK(std::abs(DensityMatrix(m).purity() - 1.0) < 1e-15);
}

TEST_CASE("fubini-study distance") {
    Rng rng = make_rng(8);
    const PureState a = random_state(3, rng);
    const PureState b = random_state(3, rng);
    CHECK(fs_distance_sq(a, a) < 1e-15);
    std::vector<cplx> rotated(a.amplitudes().begin(), a.amplitudes().end());
    for (cplx &z : rotated) {
        z *= std::polar(1.0, 0.77);
    }
    const PureState ap(rotated);
    CHECK(fs_distance_sq(a, ap) < 1e-14);
    CHECK(std::abs(fs_distance_sq(a, b) - fs_distance_sq(b, a)) < 1e-15);
    CHECK(std::abs(fs_distance_sq(ap, b) - fs_distance_sq(a, b)) < 1e-14);
    CHECK(std::abs(fs_distance_sq(zero(), one()) - 1.0) < 1e-15);
    const double d = fs_distance_sq(a, b);
    CHECK(d >= 0.0);
    CHECK(d <= 1.0);
    CHECK_THROWS_AS((void)fs_distance_sq(zero(), bell()), Error);
}
