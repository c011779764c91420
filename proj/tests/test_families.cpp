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

#include <set>

#include "entdist/families.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace entdist;
using namespace testutil;

namespace {

const double kW1 = std::acos(1.0 / std::sqrt(3.0));

// Amplitude table check: every index in `phase1` carries e^{-i phi}, in
// `phase2` e^{-2i phi}, the rest are real and positive.
void check_brs_table(int m, double phi, const std::set<std::size_t> &phase1,
                     const std::set<std::size_t> &phase2) {
    const PureState s = brs_state(m, phi);
    const double base = std::pow(2.0, -0.5 * m);
    for (std::size_t k = 0; k < s.dim(); ++k) {
        int n = 0;
        if (phase1.count(k)) {
            n = 1;
        } else if (phase2.count(k)) {
            n = 2;
        }
        CHECK(std::abs(s[k] - base * std::polar(1.0, -n * phi)) < 1e-12);
    }
}

// Independent "01" counter over the string b_{M-1} ... b_0.
int count_pairs(std::size_t k, int m) {
    std::string bits;
    for (int q = m - 1; q >= 0; --q) {
        bits.push_back(((k >> q) & 1) ? '1' : '0');
    }
    int n = 0;
    for (std::size_t i = 0; i + 1 < bits.size(); ++i) {
        n += bits[i] == '0' && bits[i + 1] == '1';
    }
    return n;
}

FamilySpec spec(FamilyKind kind, int m, std::vector<double> params) {
    return FamilySpec{kind, m, std::move(params)};
}

} // namespace

TEST_CASE("ghz-like states") {
    const PureState g = ghzl_state(2, kPi / 4);
    CHECK(fs_distance_sq(g, bell()) < 1e-15);
    CHECK(fs_distance_sq(ghzl_state(3, 0.0), PureState::basis(3, 0)) < 1e-15);
    const PureState h = ghzl_state(4, 0.3);
    for (std::size_t k = 1; k < 15; ++k) {
        CHECK(h[k] == cplx(0.0));
    }
    CHECK(std::abs(h[0] - std::cos(0.3)) < 1e-15);
    CHECK(std::abs(h[15] - std::sin(0.3)) < 1e-15);
    CHECK(std::abs(entanglement_distance_value(ghzl_state(5, kPi / 8)) / 5 - 0.5) < 1e-12);
    CHECK_THROWS_AS((void)ghzl_state(3, 2.0), Error);
    CHECK_THROWS_AS((void)ghzl_state(1, 0.2), Error);
}

TEST_CASE("brs coefficient tables") {
    for (double phi : {0.4, 1.7, kPi, 5.0}) {
        check_brs_table(2, phi, {1}, {});
        check_brs_table(3, phi, {1, 2, 3, 5}, {});
        // M=4: n(k)=2 only for 0101; n(k)=0 for 0000, 1000, 1100, 1110, 1111.
        std::set<std::size_t> one;
        for (std::size_t k = 0; k < 16; ++k) {
            if (k != 5 && k != 0 && k != 8 && k != 12 && k != 14 && k != 15) {
                one.insert(k);
            }
        }
        check_brs_table(4, phi, one, {5});
    }
}

TEST_CASE("brs operator and combinatorial routes agree") {
    Rng rng = make_rng(404);
    std::uniform_real_distribution<double> u(0.0, 2 * kPi);
    for (int m = 2; m <= 10; ++m) {
        for (std::size_t k = 0; k < (std::size_t{1} << m); ++k) {
            CHECK(count_01_pairs(k, m) == count_pairs(k, m));
        }
        for (int t = 0; t < 20; ++t) {
            const double phi = u(rng);
            const PureState a = brs_state(m, phi);
            const PureState b = brs_state_combinatorial(m, phi);
            double diff = 0.0;
            for (std::size_t k = 0; k < a.dim(); ++k) {
                diff = std::max(diff, std::abs(a[k] - b[k]));
            }
            CHECK(diff < 1e-12);
        }
    }
}

TEST_CASE("brs separability at phi = 0 and 2 pi") {
    for (int m = 2; m <= 8; ++m) {
        CHECK(entanglement_distance_value(brs_state(m, 0.0)) < 1e-12);
        CHECK(entanglement_distance_value(brs_state(m, 2 * kPi)) < 1e-12);
    }
}

TEST_CASE("w states") {
    const PureState w2 = w_state(2, {kPi / 4});
    CHECK(std::abs(w2[1] - 1 / std::sqrt(2.0)) < 1e-15);
    CHECK(std::abs(w2[2] - 1 / std::sqrt(2.0)) < 1e-15);
    const PureState w3 = w_state(3, {kW1, kPi / 4});
    for (std::size_t k : {1, 2, 4}) {
        CHECK(std::abs(w3[k] - 1 / std::sqrt(3.0)) < 1e-12);
    }
    Rng rng = make_rng(1);
    std::uniform_real_distribution<double> u(0.0, kPi / 2);
    for (int t = 0; t < 20; ++t) {
        const int m = 2 + t % 5;
        std::vector<double> a;
        for (int i = 0; i + 1 < m; ++i) {
            a.push_back(u(rng));
        }
        const auto alpha = w_amplitudes(a);
        double norm = 0.0;
        for (double x : alpha) {
            norm += x * x;
        }
        CHECK(std::abs(norm - 1.0) < 1e-12);
        const PureState w = w_state(m, a);
        for (std::size_t k = 0; k < w.dim(); ++k) {
            const bool one_hot = k != 0 && (k & (k - 1)) == 0;
            if (!one_hot) {
                CHECK(w[k] == cplx(0.0));
            }
        }
    }
    CHECK_THROWS_AS((void)w_state(3, {0.2}), Error);
    CHECK_THROWS_AS((void)w_state(3, {0.2, -0.1}), Error);
}

TEST_CASE("closed-form ED examples") {
    CHECK(std::abs(family_ed_closed_form(spec(FamilyKind::GHZL, 4, {kPi / 4})) - 1.0) < 1e-15);
    CHECK(std::abs(family_ed_closed_form(spec(FamilyKind::BRS, 4, {kPi})) - 1.0) < 1e-15);
    CHECK(std::abs(family_ed_closed_form(spec(FamilyKind::W, 3, {kW1, kPi / 4})) - 8.0 / 9.0) <
          1e-12);
    CHECK(std::abs(family_ed_closed_form(spec(FamilyKind::W, 3, {kPi / 4, 0.0})) - 2.0 / 3.0) <
          1e-12);
    CHECK_THROWS_AS((void)family_ed_closed_form(spec(FamilyKind::BRS, 5, {1.0})), Error);
}

TEST_CASE("closed-form ED matches numeric ED over sweeps") {
    const int n = 50;
    for (int i = 0; i < n; ++i) {
        const double theta = (kPi / 2) * i / (n - 1);
        const double phi = (2 * kPi) * i / (n - 1);
        for (int m = 2; m <= 6; ++m) {
            const auto s = spec(FamilyKind::GHZL, m, {theta});
            CHECK(std::abs(family_ed_closed_form(s) - entanglement_distance_value(make_state(s)) / m) <
                  1e-10);
        }
        for (int m = 2; m <= 4; ++m) {
            const auto s = spec(FamilyKind::BRS, m, {phi});
            CHECK(std::abs(family_ed_closed_form(s) - entanglement_distance_value(make_state(s)) / m) <
                  1e-10);
        }
        for (int j = 0; j < n; j += 7) {
            const double t2 = (kPi / 2) * j / (n - 1);
            const auto s = spec(FamilyKind::W, 3, {theta, t2});
            CHECK(std::abs(family_ed_closed_form(s) - entanglement_distance_value(make_state(s)) / 3) <
                  1e-10);
        }
        const auto w4 = spec(FamilyKind::W, 4, {theta, 0.7, 1.1});
        CHECK(std::abs(family_ed_closed_form(w4) - entanglement_distance_value(make_state(w4)) / 4) <
              1e-10);
    }
}

TEST_CASE("closed-form EM matches numeric EM") {
    // Midpoints keep every Bloch vector away from zero, where the frame is
    // only fixed up to sign.
    const int n = 50;
    for (int i = 0; i < n; ++i) {
        const double theta = (kPi / 2) * (i + 0.5) / n;
        const double phi = (2 * kPi) * (i + 0.5) / n;
        std::vector<FamilySpec> specs = {spec(FamilyKind::GHZL, 2, {theta}),
                                         spec(FamilyKind::GHZL, 5, {theta}),
                                         spec(FamilyKind::BRS, 2, {phi}),
                                         spec(FamilyKind::BRS, 3, {phi}),
                                         spec(FamilyKind::BRS, 4, {phi}),
                                         spec(FamilyKind::W, 2, {theta})};
        for (const auto &s : specs) {
            const Eigen::MatrixXd numeric = entanglement_distance(make_state(s)).em.entries;
            CHECK(max_abs_diff(family_em_closed_form(s).entries, numeric) < 1e-10);
        }
    }
    const auto uniform = spec(FamilyKind::W, 3, {kW1, kPi / 4});
    const Eigen::MatrixXd g = family_em_closed_form(uniform).entries;
    CHECK(max_abs_diff(g, entanglement_distance(make_state(uniform)).em.entries) < 1e-10);
    for (int a = 0; a < 3; ++a) {
        for (int b = 0; b < 3; ++b) {
            CHECK(std::abs(g(a, b) - (a == b ? 8.0 / 9.0 : -4.0 / 9.0)) < 1e-12);
        }
    }
    CHECK_THROWS_AS((void)family_em_closed_form(spec(FamilyKind::BRS, 5, {1.0})), Error);
    CHECK_THROWS_AS((void)family_em_closed_form(spec(FamilyKind::W, 4, {0.1, 0.2, 0.3})), Error);
}

TEST_CASE("brs em reference matrices") {
    // Independent evaluation of the printed s^2 * pattern(c) matrices,
    // compared after taking absolute values to factor out the frame gauge.
    for (double phi : {0.5, 2.0, 4.0}) {
        const double s2 = std::pow(std::sin(phi / 2), 2);
        const double c = std::cos(phi / 2);
        Eigen::MatrixXd g3(3, 3);
        g3 << 1, c, 0, c, 1 + c * c, c, 0, c, 1;
        g3 *= s2;
        Eigen::MatrixXd g4(4, 4);
        g4 << 1, c, 0, 0, c, 1 + c * c, c * c, 0, 0, c * c, 1 + c * c, c, 0, 0, c, 1;
        g4 *= s2;
        CHECK(max_abs_diff(entanglement_distance(brs_state(3, phi)).em.entries.cwiseAbs(),
                           g3.cwiseAbs()) < 1e-10);
        CHECK(max_abs_diff(entanglement_distance(brs_state(4, phi)).em.entries.cwiseAbs(),
                           g4.cwiseAbs()) < 1e-10);
    }
}

TEST_CASE("fig5 grid") {
    const auto grid = fig5_grid(101);
    REQUIRE(grid.size() == 101u * 101u);
    double best = -1.0;
    Fig5Point arg;
    for (const auto &p : grid) {
        if (p.ed_per_qubit > best) {
            best = p.ed_per_qubit;
            arg = p;
        }
        if (p.theta1 == 0.0) {
            CHECK(std::abs(p.ed_per_qubit) < 1e-14);
        }
        const bool boundary2 = p.theta2 == 0.0 || std::abs(p.theta2 - kPi / 2) < 1e-14;
        const bool interior1 = p.theta1 > 0.0 && std::abs(p.theta1 - kPi / 2) > 1e-14;
        if (boundary2 && interior1) {
            CHECK(p.ed_per_qubit > 0.0);
            CHECK(p.ed_per_qubit <= 2.0 / 3.0 + 1e-12);
        }
        CHECK(p.ed_per_qubit <= 8.0 / 9.0 + 1e-12);
    }
    // Grid spacing is pi/200; the peak is quadratic so its deficit is O(h^2).
    const double h = kPi / 200;
    CHECK(best > 8.0 / 9.0 - 4 * h * h);
    CHECK(std::abs(arg.theta1 - kW1) <= h);
    CHECK(std::abs(arg.theta2 - kPi / 4) <= h);
    CHECK(fig5_grid(2).size() == 4u);
    CHECK_THROWS_AS((void)fig5_grid(1), Error);
}

TEST_CASE("family spec validation and naming") {
    CHECK_THROWS_AS(spec(FamilyKind::GHZL, 1, {0.1}).validate(), Error);
    CHECK_THROWS_AS(spec(FamilyKind::BRS, 3, {7.0}).validate(), Error);
    CHECK_THROWS_AS(spec(FamilyKind::BRS, 3, {}).validate(), Error);
    CHECK_NOTHROW(spec(FamilyKind::W, 3, {0.1, 0.2}).validate());
    for (auto k : {FamilyKind::GHZL, FamilyKind::BRS, FamilyKind::W}) {
        CHECK(family_kind_from_string(to_string(k)) == k);
    }
    CHECK_THROWS_AS((void)family_kind_from_string("cluster"), Error);
}
