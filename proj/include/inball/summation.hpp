#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

// Compensated (Kahan) summation of indexed term series, with a serial
// reference path and a chunk-parallel path. The parallel path splits the
// index range into fixed-size chunks, sums each chunk serially with
// compensation, and combines the partials in chunk order, so its result is
// independent of thread count and scheduling.

namespace inball {

struct KahanAccumulator {
    double sum = 0.0;
    double comp = 0.0;

    void add(double term) {
        double y = term - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }

    double value() const { return sum; }
};

// Serial compensated sum of term(k) for k in [lo, hi], increasing k.
template <typename TermFn>
double kahan_sum_serial(std::int64_t lo, std::int64_t hi, TermFn term) {
    KahanAccumulator acc;
    for (std::int64_t k = lo; k <= hi; ++k) acc.add(term(k));
    return acc.value();
}

namespace detail {
constexpr std::int64_t kSumChunk = std::int64_t{1} << 20;
}

// Chunked compensated sum of term(k) for k in [lo, hi]. Chunk boundaries
// are fixed by kSumChunk, so the result is deterministic whether or not
// the chunks run in parallel.
template <typename TermFn>
double kahan_sum_chunked(std::int64_t lo, std::int64_t hi, TermFn term) {
    if (hi < lo) return 0.0;
    const std::int64_t n = hi - lo + 1;
    const std::int64_t nchunks = (n + detail::kSumChunk - 1) / detail::kSumChunk;
    std::vector<double> partial(static_cast<std::size_t>(nchunks));

#pragma omp parallel for schedule(dynamic)
    for (std::int64_t c = 0; c < nchunks; ++c) {
        const std::int64_t a = lo + c * detail::kSumChunk;
        const std::int64_t b = std::min(hi, a + detail::kSumChunk - 1);
        partial[static_cast<std::size_t>(c)] = kahan_sum_serial(a, b, term);
    }

    KahanAccumulator acc;
    for (double p : partial) acc.add(p);
    return acc.value();
}

}  // namespace inball
