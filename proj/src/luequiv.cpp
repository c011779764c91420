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

#include "entdist/luequiv.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "entdist/kernels.hpp"
#include "entdist/optimize.hpp"
#include "entdist/random.hpp"

namespace entdist {

void MatchConfig::validate() const {
    if (grid_points_per_sphere < 1 || restarts < 1 || polish_iters < 0) {
        throw Error("MatchConfig counts must be positive");
    }
    if (!(match_tol > 0.0) || !(match_tol < inequivalence_margin)) {
        throw Error("MatchConfig requires 0 < match_tol < inequivalence_margin");
    }
}

LocalCorrelations LocalCorrelations::of(const PureState &state) {
    const int m = state.num_qubits();
    LocalCorrelations c;
    c.num_qubits = m;
    c.bloch = kernels::bloch_vectors(state.amplitudes(), m);
    c.pair.assign(static_cast<std::size_t>(m * m), Eigen::Matrix3d::Zero());
    std::array<Mat2, 3> s = {pauli(1), pauli(2), pauli(3)};
    for (int mu = 0; mu < m; ++mu) {
        for (int nu = mu + 1; nu < m; ++nu) {
            const Eigen::Matrix4cd rho = kernels::two_qubit_rdm(state.amplitudes(), m, mu, nu);
            Eigen::Matrix3d t;
            for (int a = 0; a < 3; ++a) {
                for (int b = 0; b < 3; ++b) {
                    // Local index r = bit_mu + 2 bit_nu: operator is s_b (x) s_a.
                    cplx acc = 0.0;
                    for (int r = 0; r < 4; ++r) {
                        for (int q = 0; q < 4; ++q) {
                            acc += rho(q, r) * s[static_cast<std::size_t>(b)](r >> 1, q >> 1) *
                                   s[static_cast<std::size_t>(a)](r & 1, q & 1);
                        }
                    }
                    t(a, b) = acc.real();
                }
            }
            c.pair[static_cast<std::size_t>(mu * m + nu)] = t;
            c.pair[static_cast<std::size_t>(nu * m + mu)] = t.transpose();
        }
    }
    return c;
}

MetricTensor metric_from_correlations(const LocalCorrelations &corr,
                                      std::span<const Vec3> frame) {
    const int m = corr.num_qubits;
    if (static_cast<int>(frame.size()) != m) {
        throw Error("frame size does not match the state");
    }
    MetricTensor g{Eigen::MatrixXd(m, m)};
    for (int a = 0; a < m; ++a) {
        const double pa = frame[static_cast<std::size_t>(a)].dot(corr.bloch[static_cast<std::size_t>(a)]);
        g.entries(a, a) = 1.0 - pa * pa;
        for (int b = a + 1; b < m; ++b) {
            const double pb = frame[static_cast<std::size_t>(b)].dot(corr.bloch[static_cast<std::size_t>(b)]);
            const double v = frame[static_cast<std::size_t>(a)].dot(
                                 corr.tensor(a, b) * frame[static_cast<std::size_t>(b)]) -
                             pa * pb;
            g.entries(a, b) = v;
            g.entries(b, a) = v;
        }
    }
    return g;
}

std::vector<Vec3> fibonacci_sphere(int count) {
    if (count < 1) {
        throw Error("fibonacci_sphere: count must be positive");
    }
    std::vector<Vec3> pts;
    pts.reserve(static_cast<std::size_t>(count));
    const double golden = kPi * (3.0 - std::sqrt(5.0));
    for (int i = 0; i < count; ++i) {
        const double z = 1.0 - (2.0 * i + 1.0) / count;
        const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        const double phi = golden * i;
        pts.emplace_back(r * std::cos(phi), r * std::sin(phi), z);
    }
    return pts;
}

namespace {

using Frame = std::vector<Vec3>;

std::pair<Vec3, Vec3> tangent_basis(const Vec3 &n) {
    Vec3 helper = std::abs(n.x()) < 0.6 ? Vec3::UnitX() : Vec3::UnitY();
    Vec3 e1 = n.cross(helper).normalized();
    Vec3 e2 = n.cross(e1);
    return {e1, e2};
}

/// Squared Frobenius residual of the whole frame.
double objective(const LocalCorrelations &c, const Eigen::MatrixXd &t, const Frame &n) {
    const auto g = metric_from_correlations(c, n);
    return (g.entries - t).squaredNorm();
}

/// The part of the objective that depends on sphere `mu`, with the other
/// axes frozen. Row mu is linear in n^mu off the diagonal.
struct SphereSlice {
    const LocalCorrelations *c = nullptr;
    const Eigen::MatrixXd *t = nullptr;
    int mu = 0;
    std::vector<Vec3> w;
    std::vector<double> target;

    SphereSlice(const LocalCorrelations &corr, const Eigen::MatrixXd &tgt, const Frame &n, int q)
        : c(&corr), t(&tgt), mu(q) {
        const int m = corr.num_qubits;
        for (int nu = 0; nu < m; ++nu) {
            if (nu == mu) {
                continue;
            }
            const auto &bn = corr.bloch[static_cast<std::size_t>(nu)];
            const auto &vn = n[static_cast<std::size_t>(nu)];
            w.push_back(corr.tensor(mu, nu) * vn - corr.bloch[static_cast<std::size_t>(mu)] * bn.dot(vn));
            target.push_back(tgt(mu, nu));
        }
    }

    [[nodiscard]] double operator()(const Vec3 &n) const {
        double s = 0.0;
        for (std::size_t i = 0; i < w.size(); ++i) {
            const double d = n.dot(w[i]) - target[i];
            s += 2.0 * d * d;
        }
        const double p = n.dot(c->bloch[static_cast<std::size_t>(mu)]);
        const double d = 1.0 - p * p - (*t)(mu, mu);
        return s + d * d;
    }
};

/// One sweep of per-sphere lattice search; returns the new objective.
double grid_sweep(const LocalCorrelations &c, const Eigen::MatrixXd &t, Frame &n,
                  const std::vector<Vec3> &lattice) {
    for (int mu = 0; mu < c.num_qubits; ++mu) {
        const SphereSlice slice(c, t, n, mu);
        Vec3 best = n[static_cast<std::size_t>(mu)];
        double best_val = slice(best);
        for (const auto &p : lattice) {
            const double v = slice(p);
            if (v < best_val) {
                best_val = v;
                best = p;
            }
        }
        n[static_cast<std::size_t>(mu)] = best;
    }
    return objective(c, t, n);
}

/// Cyclic coordinate refinement: 2-angle simplex descent on each sphere.
double polish_cyclic(const LocalCorrelations &c, const Eigen::MatrixXd &t, Frame &n,
                     int sweeps, double stop_below) {
    double current = objective(c, t, n);
    double step = 0.05;
    NelderMeadOptions opts;
    opts.max_iters = 80;
    opts.ftol = 0.0;
    opts.xtol = 1e-12;
    opts.adaptive = false;
    for (int s = 0; s < sweeps && current > stop_below; ++s) {
        double moved = 0.0;
        for (int mu = 0; mu < c.num_qubits; ++mu) {
            const SphereSlice slice(c, t, n, mu);
            const Vec3 n0 = n[static_cast<std::size_t>(mu)];
            const auto [e1, e2] = tangent_basis(n0);
            const auto chart = [&](const Eigen::VectorXd &x) {
                return Vec3(n0 + x(0) * e1 + x(1) * e2).normalized();
            };
            const double start = slice(n0);
            const auto r = nelder_mead([&](const Eigen::VectorXd &x) { return slice(chart(x)); },
                                       Eigen::VectorXd::Zero(2), step, opts);
            if (r.value < start) {
                n[static_cast<std::size_t>(mu)] = chart(r.x);
                moved = std::max(moved, r.x.norm());
            }
        }
        const double next = objective(c, t, n);
        const double gain = current - next;
        current = std::min(current, next);
        step = std::clamp(4.0 * moved, 1e-7, 0.05);
        if (gain <= 1e-15 * (1.0 + current)) {
            break;
        }
    }
    return current;
}

/// Joint damped Gauss-Newton refinement on all spheres at once. Coordinate
/// sweeps converge linearly on coupled spheres; this closes the gap to
/// machine precision when a zero-residual frame exists nearby.
double polish_joint(const LocalCorrelations &c, const Eigen::MatrixXd &t, Frame &n,
                    int iters) {
    const int m = c.num_qubits;
    const int nres = m * (m + 1) / 2;
    const double w_off = std::sqrt(2.0);
    double current = objective(c, t, n);
    double lambda = 1e-3;
    for (int it = 0; it < iters && current > 0.0; ++it) {
        std::vector<std::pair<Vec3, Vec3>> basis;
        for (const auto &v : n) {
            basis.push_back(tangent_basis(v));
        }
        Eigen::VectorXd r(nres);
        Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(nres, 2 * m);
        const auto g = metric_from_correlations(c, n).entries;
        int row = 0;
        for (int a = 0; a < m; ++a) {
            const auto &na = n[static_cast<std::size_t>(a)];
            const auto &ba = c.bloch[static_cast<std::size_t>(a)];
            for (int b = a; b < m; ++b) {
                Vec3 da;
                Vec3 db = Vec3::Zero();
                double w = 1.0;
                if (a == b) {
                    da = -2.0 * na.dot(ba) * ba;
                } else {
                    const auto &nb = n[static_cast<std::size_t>(b)];
                    const auto &bb = c.bloch[static_cast<std::size_t>(b)];
                    da = c.tensor(a, b) * nb - ba * bb.dot(nb);
                    db = c.tensor(b, a) * na - bb * ba.dot(na);
                    w = w_off;
                }
                r(row) = w * (g(a, b) - t(a, b));
                const auto &[ea1, ea2] = basis[static_cast<std::size_t>(a)];
                jac(row, 2 * a) += w * da.dot(ea1);
                jac(row, 2 * a + 1) += w * da.dot(ea2);
                if (a != b) {
                    const auto &[eb1, eb2] = basis[static_cast<std::size_t>(b)];
                    jac(row, 2 * b) += w * db.dot(eb1);
                    jac(row, 2 * b + 1) += w * db.dot(eb2);
                }
                ++row;
            }
        }
        const Eigen::MatrixXd jtj = jac.transpose() * jac;
        const Eigen::VectorXd jtr = jac.transpose() * r;
        bool improved = false;
        for (int tries = 0; tries < 8 && !improved; ++tries) {
            Eigen::MatrixXd a = jtj;
            a.diagonal().array() += lambda * (1.0 + jtj.diagonal().array());
            const Eigen::VectorXd delta = a.ldlt().solve(-jtr);
            Frame trial = n;
            for (int q = 0; q < m; ++q) {
                const auto &[e1, e2] = basis[static_cast<std::size_t>(q)];
                trial[static_cast<std::size_t>(q)] =
                    (n[static_cast<std::size_t>(q)] + delta(2 * q) * e1 + delta(2 * q + 1) * e2)
                        .normalized();
            }
            const double v = objective(c, t, trial);
            if (v < current) {
                n = std::move(trial);
                const bool tiny = current - v <= 1e-16 * current;
                current = v;
                lambda = std::max(lambda * 0.2, 1e-12);
                improved = true;
                if (tiny) {
                    return current;
                }
            } else {
                lambda *= 10.0;
            }
        }
        if (!improved) {
            break;
        }
    }
    return current;
}

/// Escapes mirror-image local minima. The diagonal of g fixes only
/// (n.b)^2, so a stalled sphere is often a reflection away from a zero of
/// the residual: try the discrete images of each axis and re-polish.
double hop_mirrors(const LocalCorrelations &c, const Eigen::MatrixXd &t, Frame &n,
                   double stop_below) {
    double current = objective(c, t, n);
    bool improved = true;
    for (int round = 0; round < 4 && improved && current > stop_below; ++round) {
        improved = false;
        for (int mu = 0; mu < c.num_qubits && current > stop_below; ++mu) {
            const Vec3 v = n[static_cast<std::size_t>(mu)];
            const Vec3 &b = c.bloch[static_cast<std::size_t>(mu)];
            const Vec3 bh = b.norm() > tol::kDegenerate ? Vec3(b.normalized()) : Vec3::UnitZ();
            const Vec3 par = v.dot(bh) * bh;
            for (const Vec3 &cand : {Vec3(-v), Vec3(2.0 * par - v), Vec3(v - 2.0 * par)}) {
                Frame trial = n;
                trial[static_cast<std::size_t>(mu)] = cand.normalized();
                const double val = polish_joint(c, t, trial, 100);
                if (val < current * (1.0 - 1e-9)) {
                    n = std::move(trial);
                    current = val;
                    improved = true;
                }
            }
        }
    }
    return current;
}

Frame initial_frame(const LocalCorrelations &c, int restart, Rng &rng) {
    if (restart == 0) {
        Frame n;
        for (const auto &b : c.bloch) {
            n.push_back(b.norm() > tol::kDegenerate ? Vec3(b.normalized()) : Vec3::UnitZ());
        }
        return n;
    }
    return random_frame(c.num_qubits, rng);
}

} // namespace

FrameMatch frame_match(const MetricTensor &target, const LocalCorrelations &state_b,
                       const MatchConfig &cfg) {
    cfg.validate();
    const int m = state_b.num_qubits;
    if (target.size() != m) {
        throw Error("frame_match: target is " + std::to_string(target.size()) +
                    "x" + std::to_string(target.size()) + " but state B has " +
                    std::to_string(m) + " qubits");
    }
    const auto lattice = fibonacci_sphere(cfg.grid_points_per_sphere);
    const double stop_sq = std::pow(cfg.match_tol * 1e-2, 2);

    FrameMatch best;
    double best_sq = std::numeric_limits<double>::infinity();
    double best_grid_sq = std::numeric_limits<double>::infinity();
    for (int r = 0; r < cfg.restarts; ++r) {
        Rng rng = make_rng(cfg.seed, static_cast<std::uint64_t>(r));
        Frame n = initial_frame(state_b, r, rng);
        double grid_sq = 0.0;
        double sq = 0.0;
        if (r % 2 == 0) {
            grid_sq = grid_sweep(state_b, target.entries, n, lattice);
            grid_sq = std::min(grid_sq, grid_sweep(state_b, target.entries, n, lattice));
            sq = polish_cyclic(state_b, target.entries, n, cfg.polish_iters, stop_sq);
            sq = polish_joint(state_b, target.entries, n, 50);
            sq = hop_mirrors(state_b, target.entries, n, stop_sq);
        } else {
            // The greedy grid stage funnels every start into the same basin;
            // odd restarts descend straight from the random frame instead.
            grid_sq = objective(state_b, target.entries, n);
            sq = polish_joint(state_b, target.entries, n, 200);
            sq = hop_mirrors(state_b, target.entries, n, stop_sq);
        }
        ++best.restarts_run;
        if (sq < best_sq) {
            best_sq = sq;
            best_grid_sq = grid_sq;
            best.frame = UnitVectorFrame(n);
        }
        if (best_sq <= stop_sq) {
            break;
        }
    }
    best.residual = std::sqrt(best_sq);
    best.grid_residual = std::sqrt(best_grid_sq);
    return best;
}

FrameMatch frame_match(const MetricTensor &target, const PureState &state_b,
                       const MatchConfig &cfg) {
    return frame_match(target, LocalCorrelations::of(state_b), cfg);
}

std::string to_string(EquivalenceStatus status) {
    switch (status) {
    case EquivalenceStatus::MatchAllWitnesses:
        return "MATCH_ALL_WITNESSES";
    case EquivalenceStatus::NoMatchFound:
        return "NO_MATCH_FOUND";
    case EquivalenceStatus::Inconclusive:
        return "INCONCLUSIVE";
    }
    return "?";
}

double EquivalenceReport::max_residual() const {
    double r = 0.0;
    for (const auto &w : witnesses) {
        r = std::max(r, w.residual);
    }
    return r;
}

EquivalenceReport equivalence_test(const PureState &state_a, const PureState &state_b,
                                   const MatchConfig &cfg) {
    cfg.validate();
    const int m = state_a.num_qubits();
    if (state_b.num_qubits() != m) {
        throw Error("equivalence_test: qubit counts differ");
    }
    EquivalenceReport report;
    report.match_tol = cfg.match_tol;
    report.inequivalence_margin = cfg.inequivalence_margin;
    report.measure_gap = std::abs(entanglement_distance_value(state_a) -
                                  entanglement_distance_value(state_b));
    if (cfg.measure_precheck && report.measure_gap > 1e-8) {
        report.status = EquivalenceStatus::NoMatchFound;
        report.measure_mismatch = true;
        report.verdict = "not LU-equivalent: entanglement distances differ";
        return report;
    }

    std::vector<std::pair<std::string, UnitVectorFrame>> frames;
    frames.emplace_back("em-optimal", optimal_frame(state_a).frame);
    frames.emplace_back("axis-x", UnitVectorFrame::uniform(m, Vec3::UnitX()));
    frames.emplace_back("axis-y", UnitVectorFrame::uniform(m, Vec3::UnitY()));
    frames.emplace_back("axis-z", UnitVectorFrame::uniform(m, Vec3::UnitZ()));
    Rng rng = make_rng(cfg.seed, 0xF00DULL);
    for (int i = 0; i < cfg.restarts; ++i) {
        frames.emplace_back("random-" + std::to_string(i), UnitVectorFrame(random_frame(m, rng)));
    }

    const auto corr_a = LocalCorrelations::of(state_a);
    const auto corr_b = LocalCorrelations::of(state_b);
    report.witnesses.resize(frames.size());
    const int count = static_cast<int>(frames.size());
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < count; ++i) {
        const auto &[label, v] = frames[static_cast<std::size_t>(i)];
        MatchConfig wcfg = cfg;
        wcfg.seed = cfg.seed * 1000003ULL + static_cast<std::uint64_t>(i);
        const auto target = metric_from_correlations(corr_a, v.vectors());
        auto fm = frame_match(target, corr_b, wcfg);
        report.witnesses[static_cast<std::size_t>(i)] = {label, v, std::move(fm.frame), fm.residual};
    }

    const double worst = report.max_residual();
    if (worst < cfg.match_tol) {
        report.status = EquivalenceStatus::MatchAllWitnesses;
        report.conclusive_for_equivalence = (m == 2);
        report.verdict = m == 2 ? "LU-equivalent (two-qubit metric matching is conclusive)"
                                : "consistent with equivalence (second-order only)";
    } else if (worst > cfg.inequivalence_margin) {
        report.status = EquivalenceStatus::NoMatchFound;
        report.verdict = "not LU-equivalent: a witness frame has no matching frame";
    } else {
        report.status = EquivalenceStatus::Inconclusive;
        report.verdict = "inconclusive: best residual between match tolerance and margin";
    }
    return report;
}

} // namespace entdist
