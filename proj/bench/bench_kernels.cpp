// Serial reference vs OpenMP kernels. Usage: bench_kernels [repeats]

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>

#include "ghzw/noise.hpp"
#include "ghzw/reference.hpp"
#include "ghzw/wigner.hpp"

using namespace ghzw;

namespace {

double best_seconds(int repeats, const std::function<void()>& fn) {
    double best = 1e300;
    for (int r = 0; r < repeats; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        fn();
        const auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
    }
    return best;
}

void report(const char* name, double serial, double parallel, bool identical) {
    std::printf("%-34s serial %8.4f s  parallel %8.4f s  speedup %5.2fx  %s\n", name, serial, parallel,
                serial / parallel, identical ? "identical" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
    const int repeats = argc > 1 ? std::atoi(argv[1]) : 3;
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());

    for (std::size_t n : {3u, 5u}) {
        const DensityMatrix rho = ket_to_dm(ghz_state(n));
        WignerGrid a;
        WignerGrid b;
        const double s = best_seconds(repeats, [&] { a = reference::wigner_grid(rho, n, 181, 361); });
        const double p = best_seconds(repeats, [&] { b = wigner_grid(rho, n, 181, 361); });
        char name[64];
        std::snprintf(name, sizeof name, "wigner_grid n=%zu 181x361", n);
        report(name, s, p, a.values == b.values);
    }

    for (std::size_t n : {3u, 6u}) {
        GaussianNoiseSpec spec;
        spec.stddev = 0.5;
        spec.ensemble_size = 2000;
        const Ket psi = ghz_state(n);
        DensityMatrix a = DensityMatrix::maximally_mixed(n);
        DensityMatrix b = a;
        const double s = best_seconds(repeats, [&] { a = reference::ensemble_average(psi, spec); });
        const double p = best_seconds(repeats, [&] { b = ensemble_average(psi, spec); });
        char name[64];
        std::snprintf(name, sizeof name, "ensemble_average n=%zu M=2000", n);
        report(name, s, p, a == b);
    }
    return 0;
}
