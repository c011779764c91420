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

// Wall-clock comparison of the production kernels against the serial
// reference ones on dense random states.
//
//   bench_kernels [max_qubits=16] [repeats=3]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>

#include <omp.h>

#include "entdist/fsmetric.hpp"
#include "entdist/kernels.hpp"
#include "entdist/random.hpp"

namespace {

double best_of(int repeats, const std::function<void()> &fn) {
    double best = 1e300;
    for (int r = 0; r < repeats; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        fn();
        const auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
    }
    return best;
}

} // namespace

int main(int argc, char **argv) {
    using namespace entdist;
    const int max_m = argc > 1 ? std::atoi(argv[1]) : 16;
    const int repeats = argc > 2 ? std::atoi(argv[2]) : 3;
    std::printf("threads %d\n", omp_get_max_threads());
    std::printf("%-4s %-20s %12s %12s %8s %10s\n", "M", "kernel", "serial_s", "parallel_s", "speedup",
                "max_diff");
    for (int m = 8; m <= max_m; m += 2) {
        Rng rng = make_rng(1, static_cast<std::uint64_t>(m));
        const PureState psi = random_state(m, rng);
        const auto amps = psi.amplitudes();
        const auto frame = random_frame(m, rng);

        std::vector<Vec3> bs;
        std::vector<Vec3> bp;
        const double s1 = best_of(repeats, [&] { bs = kernels::serial::bloch_vectors(amps, m); });
        const double p1 = best_of(repeats, [&] { bp = kernels::bloch_vectors(amps, m); });
        double d1 = 0.0;
        for (int q = 0; q < m; ++q) {
            d1 = std::max(d1, (bs[static_cast<std::size_t>(q)] - bp[static_cast<std::size_t>(q)])
                                  .cwiseAbs()
                                  .maxCoeff());
        }
        std::printf("%-4d %-20s %12.6f %12.6f %8.2f %10.2e\n", m, "bloch_vectors", s1, p1, s1 / p1,
                    d1);

        Eigen::MatrixXd cs;
        Eigen::MatrixXd cp;
        const double s2 =
            best_of(repeats, [&] { cs = kernels::serial::frame_correlations(amps, m, frame); });
        const double p2 = best_of(repeats, [&] { cp = kernels::frame_correlations(amps, m, frame); });
        std::printf("%-4d %-20s %12.6f %12.6f %8.2f %10.2e\n", m, "frame_correlations", s2, p2,
                    s2 / p2, (cs - cp).cwiseAbs().maxCoeff());
    }
    return 0;
}
