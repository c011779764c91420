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
#include "entdist/locc.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace entdist;
using namespace testutil;

namespace {

Mat2 kraus_sum(const UnilocalKraus &k) {
    Mat2 s = Mat2::Zero();
    for (const auto &m : k.operators) {
        s += m.adjoint() * m;
    }
    return s;
}

} // namespace

TEST_CASE("random measurements are contractions") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const UnilocalKraus c = random_unilocal_measurement(1, seed, true);
        CHECK(c.complete);
        CHECK(c.operators.size() == 2u);
        CHECK((kraus_sum(c) - Mat2::Identity()).cwiseAbs().maxCoeff() < 1e-10);
        CHECK_NOTHROW(c.validate());

        const UnilocalKraus i = random_unilocal_measurement(0, seed, false);
        CHECK_FALSE(i.complete);
        const Eigen::Matrix2cd slack = Mat2::Identity() - kraus_sum(i);
        CHECK(Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd>(slack).eigenvalues().minCoeff() >= -1e-10);
    }
    const UnilocalKraus a = random_unilocal_measurement(0, 9, true);
    const UnilocalKraus b = random_unilocal_measurement(0, 9, true);
    CHECK((a.operators[0] - b.operators[0]).cwiseAbs().maxCoeff() == 0.0);
    CHECK((a.operators[1] - b.operators[1]).cwiseAbs().maxCoeff() == 0.0);

    UnilocalKraus bad{0, {2.0 * Mat2::Identity()}, false};
    CHECK_THROWS_AS(bad.validate(), Error);
    CHECK_NOTHROW(UnilocalKraus::projective_z(3).validate());
}

TEST_CASE("apply measurement examples") {
    const auto out = apply_measurement(product({plus(), zero()}), UnilocalKraus::projective_z(0));
    REQUIRE(out.size() == 2u);
    CHECK(std::abs(out[0].probability - 0.5) < 1e-15);
    CHECK(fs_distance_sq(out[0].state, PureState::basis(2, 0)) < 1e-15);
    CHECK(fs_distance_sq(out[1].state, PureState::basis(2, 1)) < 1e-15);

    const auto id = apply_measurement(bell(), UnilocalKraus{1, {Mat2::Identity()}, true});
    REQUIRE(id.size() == 1u);
    CHECK(std::abs(id[0].probability - 1.0) < 1e-15);

    const auto b = apply_measurement(bell(), UnilocalKraus::projective_z(0));
    REQUIRE(b.size() == 2u);
    CHECK(fs_distance_sq(b[0].state, PureState::basis(2, 0)) < 1e-15);
    CHECK(fs_distance_sq(b[1].state, PureState::basis(2, 3)) < 1e-15);

    // Zero-probability outcomes are dropped.
    CHECK(apply_measurement(PureState::basis(2, 0), UnilocalKraus::projective_z(1)).size() == 1u);
}

TEST_CASE("apply measurement matches dense operators") {
    Rng rng = make_rng(80);
    for (int t = 0; t < 20; ++t) {
        const int m = 2 + t % 2;
        const int q = t % m;
        const PureState psi = random_state(m, rng);
        const UnilocalKraus k = random_unilocal_measurement(q, static_cast<std::uint64_t>(t), t % 3 != 0);
        const auto out = apply_measurement(psi, k);
        REQUIRE(out.size() == k.operators.size());
        double total = 0.0;
        for (std::size_t j = 0; j < out.size(); ++j) {
            const oracle::Vec v = oracle::embed(m, {{q, k.operators[j]}}) * oracle::vec(psi);
            const double p = v.squaredNorm();
            CHECK(std::abs(out[j].probability - p) < 1e-12);
            CHECK(std::abs(std::abs(v.normalized().dot(oracle::vec(out[j].state))) - 1.0) < 1e-12);
            total += out[j].probability;
        }
        if (k.complete) {
            CHECK(std::abs(total - 1.0) < 1e-10);
        } else {
            CHECK(total <= 1.0 + 1e-12);
        }
    }
}

TEST_CASE("monotonicity examples") {
    Rng rng = make_rng(81);
    const PureState prod = product({random_state(1, rng), random_state(1, rng)});
    CHECK(std::abs(check_monotonicity(prod, random_unilocal_measurement(0, 1, true))) < 1e-12);
    CHECK(std::abs(check_monotonicity(bell(), UnilocalKraus::projective_z(0)) - 2.0) < 1e-12);
}

TEST_CASE("monotonicity margin symmetries") {
    Rng rng = make_rng(82);
    for (int t = 0; t < 20; ++t) {
        const int m = 2 + t % 2;
        const PureState psi = random_state(m, rng);
        UnilocalKraus k = random_unilocal_measurement(t % m, static_cast<std::uint64_t>(100 + t), true);
        const double margin = check_monotonicity(psi, k);
        CHECK(margin >= -1e-9);

        std::vector<cplx> amps(psi.amplitudes().begin(), psi.amplitudes().end());
        for (cplx &z : amps) {
            z *= std::polar(1.0, 1.234);
        }
        CHECK(std::abs(check_monotonicity(PureState(amps), k) - margin) < 1e-12);

        std::swap(k.operators[0], k.operators[1]);
        CHECK(std::abs(check_monotonicity(psi, k) - margin) < 1e-12);

        // Qubits other than the measured one never gain on average.
        const auto per = monotonicity_per_qubit(psi, k);
        double sum = 0.0;
        for (int q = 0; q < m; ++q) {
            sum += per[static_cast<std::size_t>(q)];
            if (q != k.qubit) {
                CHECK(per[static_cast<std::size_t>(q)] >= -1e-9);
            }
        }
        CHECK(std::abs(sum - margin) < 1e-12);
    }
}

TEST_CASE("lu, ancilla and trace removal checks") {
    Rng rng = make_rng(83);
    for (std::uint64_t s = 0; s < 10; ++s) {
        CHECK(check_lu_invariance(random_state(3, rng), s) < 1e-10);
    }
    CHECK(check_ancilla(bell(), zero()) < 1e-14);
    CHECK(check_ancilla(random_state(3, rng), random_state(2, rng)) < 1e-10);

    // GHZ with qubit 2 removed: surviving qubits stay at 1 and the
    // eigen-ensemble of the reduced state is product, so the margin is 2.
    const PureState g = ghzl_state(3, kPi / 4);
    CHECK(std::abs(check_trace_removal(g, {2}) - 2.0) < 1e-12);
    for (int t = 0; t < 10; ++t) {
        CHECK(check_trace_removal(random_state(3, rng), {t % 3}) >= -1e-9);
    }
    CHECK(std::abs(check_trace_removal(g, {})) < 1e-12);
    CHECK_THROWS_AS((void)check_trace_removal(g, {0, 1, 2}), Error);
}

TEST_CASE("purity deficit and concavity") {
    const Eigen::Matrix2cd pure = (Eigen::Matrix2cd() << 1, 0, 0, 0).finished();
    const Eigen::Matrix2cd flat = 0.5 * Eigen::Matrix2cd::Identity();
    CHECK(std::abs(purity_deficit(pure)) < 1e-15);
    CHECK(std::abs(purity_deficit(flat) - 1.0) < 1e-15);
    const Eigen::Matrix2cd other = (Eigen::Matrix2cd() << 0, 0, 0, 1).finished();
    CHECK(purity_deficit(0.5 * pure + 0.5 * other) >= 0.5 * purity_deficit(pure) + 0.5 * purity_deficit(other));

    const MonotonicityReport r = check_concavity_f(1, 10000);
    CHECK(r.trials == 10000);
    CHECK(r.violations == 0);
    CHECK(r.worst_margin >= -1e-12);
}

TEST_CASE("purity identity on random states") {
    Rng rng = make_rng(84);
    for (int t = 0; t < 200; ++t) {
        const int m = 2 + t % 4;
        const PureState psi = random_state(m, rng);
        const int q = t % m;
        const double e = 1.0 - bloch_vector(psi, q).components.squaredNorm();
        const Eigen::Matrix2cd x = partial_trace(psi, {q}).matrix();
        CHECK(std::abs(purity_deficit(x) - e) < 1e-12);
    }
}

TEST_CASE("property suites") {
    for (const auto &name : property_suites()) {
        const MonotonicityReport r = run_property_suite(name, 200, 7);
        CHECK(r.suite == name);
        CHECK(r.trials == 200);
        CHECK(r.violations == 0);
        CHECK(r.seed == 7u);
    }
    const MonotonicityReport a = run_property_suite("monotonicity", 50, 3);
    const MonotonicityReport b = run_property_suite("monotonicity", 50, 3);
    CHECK(a.worst_margin == b.worst_margin);
    CHECK_THROWS_AS((void)run_property_suite("unknown", 10, 0), Error);
    CHECK_THROWS_AS((void)run_property_suite("lu", 0, 0), Error);
}
