// Timings for the two data-parallel kernels against their serial reference
// paths: the compensated inradius summation and the brute-force facet
// enumeration. Prints one line per (kernel, variant) plus the agreement
// between the two variants.

#include <chrono>
#include <cmath>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "inball/analysis.hpp"
#include "inball/oracle.hpp"

namespace {

template <typename Fn>
double time_ms(Fn&& fn) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (compiled without OpenMP)\n");
#endif

    {
        const std::int64_t m = 100'000'000;
        double serial = 0.0, parallel = 0.0;
        const double t_serial = time_ms([&] { serial = inball::sum_terms_serial(m); });
        const double t_parallel = time_ms([&] { parallel = inball::sum_terms_parallel(m); });
        std::printf("inradius sum  m=%lld  serial %9.1f ms  parallel %9.1f ms  speedup %.2fx\n",
                    static_cast<long long>(m), t_serial, t_parallel, t_serial / t_parallel);
        std::printf("  values: serial %.17g  parallel %.17g  rel diff %.2e\n", serial, parallel,
                    std::fabs(serial - parallel) / serial);
    }

    {
        const int m = 4;
        std::size_t n_serial = 0, n_parallel = 0;
        const double t_serial = time_ms([&] { n_serial = inball::brute_facets_serial(m).size(); });
        const double t_parallel = time_ms([&] { n_parallel = inball::brute_facets(m).size(); });
        std::printf("brute facets  m=%d          serial %9.1f ms  parallel %9.1f ms  speedup %.2fx\n",
                    m, t_serial, t_parallel, t_serial / t_parallel);
        std::printf("  facet counts: serial %zu  parallel %zu\n", n_serial, n_parallel);
    }
    return 0;
}
