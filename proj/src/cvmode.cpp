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

#include "entdist/cvmode.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace entdist {

namespace {

constexpr std::size_t kMaxFockDim = std::size_t{1} << 24;
constexpr double kNormTol = 1e-10;

std::size_t ipow(std::size_t base, int exp) {
    std::size_t out = 1;
    for (int i = 0; i < exp; ++i) {
        if (out > kMaxFockDim / base) {
            throw Error("Fock space too large");
        }
        out *= base;
    }
    return out;
}

// Truncated coherent amplitudes e^{-|a|^2/2} a^n / sqrt(n!), n = 0..cutoff.
std::vector<cplx> coherent_amplitudes(cplx alpha, int cutoff) {
    std::vector<cplx> a(static_cast<std::size_t>(cutoff) + 1);
    a[0] = std::exp(-0.5 * std::norm(alpha));
    for (int n = 1; n <= cutoff; ++n) {
        a[static_cast<std::size_t>(n)] =
            a[static_cast<std::size_t>(n - 1)] * alpha / std::sqrt(static_cast<double>(n));
    }
    return a;
}

// Auto-selected cutoffs aim for a tail far below the acceptance bound:
// truncation error in <n> scales like tail * N.
constexpr double kAutoTail = 1e-14;

int resolve_cutoff(const CutoffPolicy &policy, double max_abs_alpha,
                   const auto &tail_of /* int -> double */) {
    if (policy.max_cutoff < 0 || policy.max_cutoff > 4096 || policy.cutoff < 0) {
        throw Error("invalid cutoff policy");
    }
    if (policy.cutoff > 0 && !policy.auto_raise) {
        if (tail_of(policy.cutoff) >= kFockTail) {
            throw Error("cutoff " + std::to_string(policy.cutoff) + " leaves a tail of " +
                        std::to_string(tail_of(policy.cutoff)));
        }
        return policy.cutoff;
    }
    const double target = policy.cutoff == 0 ? kAutoTail : kFockTail;
    // Below the mean the tail is O(1); skip ahead.
    int n = policy.cutoff > 0 ? policy.cutoff
                              : std::max(1, static_cast<int>(max_abs_alpha * max_abs_alpha));
    int first_ok = -1;
    for (; n <= policy.max_cutoff; ++n) {
        const double t = tail_of(n);
        if (t < kFockTail && first_ok < 0) {
            first_ok = n;
        }
        if (t < target) {
            return n;
        }
    }
    if (first_ok < 0) {
        throw Error("tail bound 1e-8 not reached below cutoff " +
                    std::to_string(policy.max_cutoff));
    }
    return policy.max_cutoff;
}

void normalize(std::vector<cplx> &v) {
    double s = 0.0;
    for (const cplx &a : v) {
        s += std::norm(a);
    }
    const double inv = 1.0 / std::sqrt(s);
    for (cplx &a : v) {
        a *= inv;
    }
}

// Applies a (dim x dim) matrix along `mode` of a tensor with `modes` axes.
std::vector<cplx> apply_mode(const std::vector<cplx> &in, std::size_t dim, int mode,
                             const Eigen::MatrixXcd &op) {
    const std::size_t stride = ipow(dim, mode);
    const std::size_t outer = in.size() / (stride * dim);
    std::vector<cplx> out(in.size());
    Eigen::VectorXcd buf(static_cast<Eigen::Index>(dim));
    for (std::size_t o = 0; o < outer; ++o) {
        for (std::size_t s = 0; s < stride; ++s) {
            const std::size_t base = o * stride * dim + s;
            for (std::size_t n = 0; n < dim; ++n) {
                buf(static_cast<Eigen::Index>(n)) = in[base + n * stride];
            }
            const Eigen::VectorXcd r = op * buf;
            for (std::size_t n = 0; n < dim; ++n) {
                out[base + n * stride] = r(static_cast<Eigen::Index>(n));
            }
        }
    }
    return out;
}

// Occupation of `mode` at flat index k.
int occupation(std::size_t k, std::size_t dim, int mode) {
    return static_cast<int>((k / ipow(dim, mode)) % dim);
}

} // namespace

void FockState::validate() const {
    if (num_modes < 1 || cutoff < 0) {
        throw Error("FockState needs num_modes >= 1 and cutoff >= 0");
    }
    if (amplitudes.size() != ipow(dim_per_mode(), num_modes)) {
        throw Error("FockState amplitude count does not match (cutoff+1)^modes");
    }
    double s = 0.0;
    for (const cplx &a : amplitudes) {
        s += std::norm(a);
    }
    if (std::abs(s - 1.0) > kNormTol) {
        throw Error("FockState is not normalized");
    }
    if (!(tail_bound < kFockTail)) {
        throw Error("FockState tail bound " + std::to_string(tail_bound) + " exceeds 1e-8");
    }
}

double coherent_tail(cplx alpha, int cutoff) {
    const double x = std::norm(alpha);
    if (x == 0.0) {
        return 0.0;
    }
    // Sum the Poisson terms above the cutoff directly; no cancellation.
    const double log_x = std::log(x);
    double tail = 0.0;
    for (int n = cutoff + 1;; ++n) {
        const double term = std::exp(-x + n * log_x - std::lgamma(n + 1.0));
        tail += term;
        if (n > x && term < 1e-20 * std::max(tail, 1e-300)) {
            break;
        }
        if (n > cutoff + 100000) {
            break;
        }
    }
    return tail;
}

FockState coherent_state(cplx alpha, const CutoffPolicy &policy) {
    const int n = resolve_cutoff(policy, std::abs(alpha),
                                 [&](int c) { return coherent_tail(alpha, c); });
    FockState s;
    s.num_modes = 1;
    s.cutoff = n;
    s.amplitudes = coherent_amplitudes(alpha, n);
    s.tail_bound = coherent_tail(alpha, n);
    normalize(s.amplitudes);
    return s;
}

FockState number_state(int n, int cutoff) {
    if (n < 0 || cutoff < n) {
        throw Error("number state needs 0 <= n <= cutoff");
    }
    FockState s;
    s.cutoff = cutoff;
    s.amplitudes.assign(static_cast<std::size_t>(cutoff) + 1, 0.0);
    s.amplitudes[static_cast<std::size_t>(n)] = 1.0;
    return s;
}

FockState tensor_product(const FockState &a, const FockState &b) {
    const int n = std::max(a.cutoff, b.cutoff);
    const std::size_t d = static_cast<std::size_t>(n) + 1;
    auto pad = [&](const FockState &s) {
        // Re-embed s at cutoff n.
        std::vector<cplx> out(ipow(d, s.num_modes), 0.0);
        const std::size_t ds = s.dim_per_mode();
        for (std::size_t k = 0; k < s.amplitudes.size(); ++k) {
            std::size_t idx = 0;
            for (int m = s.num_modes - 1; m >= 0; --m) {
                idx = idx * d + static_cast<std::size_t>(occupation(k, ds, m));
            }
            out[idx] = s.amplitudes[k];
        }
        return out;
    };
    const auto va = pad(a);
    const auto vb = pad(b);
    FockState out;
    out.num_modes = a.num_modes + b.num_modes;
    out.cutoff = n;
    out.amplitudes.resize(ipow(d, out.num_modes));
    for (std::size_t j = 0; j < vb.size(); ++j) {
        for (std::size_t i = 0; i < va.size(); ++i) {
            out.amplitudes[j * va.size() + i] = va[i] * vb[j];
        }
    }
    out.tail_bound = a.tail_bound + b.tail_bound;
    return out;
}

double CatSpec::overlap() const {
    return std::exp(-std::norm(alpha1 - alpha2));
}

FockState symmetric_cat(const CatSpec &spec, const CutoffPolicy &policy) {
    const double p = spec.overlap();
    auto build = [&](int n) {
        const auto a1 = coherent_amplitudes(spec.alpha1, n);
        const auto a2 = coherent_amplitudes(spec.alpha2, n);
        const std::size_t d = a1.size();
        std::vector<cplx> v(d * d);
        for (std::size_t j = 0; j < d; ++j) {
            for (std::size_t i = 0; i < d; ++i) {
                v[j * d + i] = a1[i] * a2[j] + a2[i] * a1[j];
            }
        }
        return v;
    };
    // Untruncated norm^2 of |a1,a2> + |a2,a1> is 2 (1 + p).
    auto tail_of = [&](int n) {
        double s = 0.0;
        for (const cplx &a : build(n)) {
            s += std::norm(a);
        }
        return std::max(0.0, 1.0 - s / (2.0 * (1.0 + p)));
    };
    // Start from the cutoff each component needs on its own.
    CutoffPolicy start = policy;
    if (start.cutoff == 0) {
        const double big = std::max(std::abs(spec.alpha1), std::abs(spec.alpha2));
        start.cutoff = resolve_cutoff({0, true, policy.max_cutoff}, big, [&](int c) {
            return std::max(coherent_tail(spec.alpha1, c), coherent_tail(spec.alpha2, c));
        });
        start.auto_raise = true;
    }
    const int n = resolve_cutoff(start, 0.0, tail_of);
    FockState s;
    s.num_modes = 2;
    s.cutoff = n;
    s.amplitudes = build(n);
    s.tail_bound = tail_of(n);
    normalize(s.amplitudes);
    return s;
}

double cat_ed_closed_form(const CatSpec &spec) {
    const double p = spec.overlap();
    return 2.0 * (1.0 - p) / (1.0 + p) * std::norm(spec.alpha1 - spec.alpha2);
}

std::vector<double> cv_mode_terms(const FockState &state) {
    const std::size_t d = state.dim_per_mode();
    std::vector<double> out;
    for (int m = 0; m < state.num_modes; ++m) {
        const std::size_t stride = ipow(d, m);
        double n_mean = 0.0;
        cplx a_mean = 0.0;
        for (std::size_t k = 0; k < state.amplitudes.size(); ++k) {
            const int n = occupation(k, d, m);
            n_mean += n * std::norm(state.amplitudes[k]);
            if (static_cast<std::size_t>(n) + 1 < d) {
                // <a> = sum_n conj(psi_n) sqrt(n+1) psi_{n+1}
                a_mean += std::conj(state.amplitudes[k]) * std::sqrt(n + 1.0) *
                          state.amplitudes[k + stride];
            }
        }
        out.push_back(n_mean - std::norm(a_mean));
    }
    return out;
}

double cv_ed(const FockState &state) {
    double s = 0.0;
    for (double t : cv_mode_terms(state)) {
        s += t;
    }
    return 4.0 * s;
}

FockState displace_all(const FockState &state, cplx beta) {
    const double reach = std::sqrt(static_cast<double>(state.cutoff)) + std::abs(beta);
    const int work = std::min(
        static_cast<int>(std::ceil(reach * reach + 12.0 * reach + 40.0)), 2 * kMaxCutoff);
    const auto w = static_cast<std::size_t>(work) + 1;
    const auto wi = static_cast<Eigen::Index>(w);

    // D = exp(beta a^dag - conj(beta) a) = exp(-iH) with H Hermitian.
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(wi, wi);
    for (Eigen::Index n = 0; n + 1 < wi; ++n) {
        const double s = std::sqrt(static_cast<double>(n + 1));
        h(n + 1, n) = cplx(0, 1) * beta * s;
        h(n, n + 1) = std::conj(h(n + 1, n));
    }
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    Eigen::VectorXcd phase(wi);
    for (Eigen::Index i = 0; i < wi; ++i) {
        phase(i) = std::polar(1.0, -es.eigenvalues()(i));
    }
    const Eigen::MatrixXcd d =
        es.eigenvectors() * phase.asDiagonal() * es.eigenvectors().adjoint();

    // Embed, apply per mode, then shrink to the smallest adequate cutoff.
    const std::size_t din = state.dim_per_mode();
    std::vector<cplx> v(ipow(w, state.num_modes), 0.0);
    for (std::size_t k = 0; k < state.amplitudes.size(); ++k) {
        std::size_t idx = 0;
        for (int m = state.num_modes - 1; m >= 0; --m) {
            idx = idx * w + static_cast<std::size_t>(occupation(k, din, m));
        }
        v[idx] = state.amplitudes[k];
    }
    for (int m = 0; m < state.num_modes; ++m) {
        v = apply_mode(v, w, m, d);
    }
    auto kept = [&](int n) {
        double s = 0.0;
        for (std::size_t k = 0; k < v.size(); ++k) {
            bool inside = true;
            for (int m = 0; m < state.num_modes && inside; ++m) {
                inside = occupation(k, w, m) <= n;
            }
            if (inside) {
                s += std::norm(v[k]);
            }
        }
        return s;
    };
    const int limit = work - 20;
    int n = state.cutoff;
    while (n < limit && 1.0 - kept(n) >= kAutoTail) {
        ++n;
    }
    if (1.0 - kept(n) >= kFockTail) {
        throw Error("displacement needs a cutoff beyond " + std::to_string(limit));
    }
    FockState out;
    out.num_modes = state.num_modes;
    out.cutoff = n;
    const std::size_t dout = static_cast<std::size_t>(n) + 1;
    out.amplitudes.assign(ipow(dout, state.num_modes), 0.0);
    for (std::size_t k = 0; k < out.amplitudes.size(); ++k) {
        std::size_t idx = 0;
        for (int m = state.num_modes - 1; m >= 0; --m) {
            idx = idx * w + static_cast<std::size_t>(occupation(k, dout, m));
        }
        out.amplitudes[k] = v[idx];
    }
    out.tail_bound = state.tail_bound + std::max(0.0, 1.0 - kept(n));
    normalize(out.amplitudes);
    return out;
}

} // namespace entdist
