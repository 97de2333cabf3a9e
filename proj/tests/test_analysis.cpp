#include <cmath>
#include <limits>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <doctest.h>

#include "inball/analysis.hpp"
#include "inball/hull.hpp"
#include "inball/summation.hpp"

using namespace inball;

namespace {

// Double-double accumulator: an error-free-transformation reference with
// roughly 106 bits of effective precision, used only to check the
// production summation against.
struct DoubleDouble {
    double hi = 0.0;
    double lo = 0.0;

    void add(double x) {
        const double s = hi + x;
        const double bb = s - hi;
        const double err = (hi - (s - bb)) + (x - bb);
        const double lo2 = lo + err;
        hi = s + lo2;
        lo = lo2 - (hi - s);
    }

    double value() const { return hi; }
};

double dd_sum_terms(std::int64_t m) {
    DoubleDouble acc;
    for (std::int64_t k = 1; k <= m; ++k) acc.add(term(k));
    return acc.value();
}

double ulps_between(double a, double b) {
    const double diff = std::fabs(a - b);
    const double ulp = std::nextafter(std::fabs(a), std::numeric_limits<double>::infinity()) -
                       std::fabs(a);
    return diff / ulp;
}

}  // namespace

TEST_CASE("summand closed form") {
    CHECK(term(1) == 1.0);
    CHECK(term(2) == doctest::Approx(3.0 - 2.0 * std::sqrt(2.0)).epsilon(1e-15));
    CHECK_THROWS_AS(term(0), std::out_of_range);
}

TEST_CASE("both algebraic summand forms agree to a few ulps") {
    auto other_form = [](std::int64_t k) {
        // (sqrt(k)-sqrt(k-1))^2 with the difference evaluated through its
        // reciprocal, the only cancellation-free route at large k
        const double d = 1.0 / (std::sqrt(double(k)) + std::sqrt(double(k - 1)));
        return d * d;
    };
    for (std::int64_t k : {std::int64_t{1}, std::int64_t{2}, std::int64_t{17}, std::int64_t{1000},
                           std::int64_t{999983}, std::int64_t{1000000}}) {
        CHECK(ulps_between(term(k), other_form(k)) <= 4.0);
        CHECK(std::fabs(term(k) - other_form(k)) <= 1e-15 * term(k));
    }
}

TEST_CASE("inradius closed form at small m") {
    const auto r1 = inradius(1);
    CHECK(r1.s == 1.0);
    CHECK(r1.s_inv_sq == 1.0);
    CHECK_FALSE(r1.lower.has_value());
    CHECK_FALSE(r1.upper.has_value());
    CHECK_FALSE(r1.asymptote.has_value());

    const auto r2 = inradius(2);
    CHECK(r2.s == doctest::Approx(0.9238795325112867).epsilon(1e-15));  // octagon apothem cos(pi/8)
    CHECK(r2.s_inv_sq == doctest::Approx(1.1715728752538099).epsilon(1e-15));
    CHECK(*r2.lower == doctest::Approx(0.1732867951399863).epsilon(1e-15));
    CHECK(*r2.upper == doctest::Approx(1.4232867951399863).epsilon(1e-15));

    CHECK(inradius(3).s == doctest::Approx(0.8864518862828913).epsilon(1e-14));
    CHECK(inradius(4).s == doctest::Approx(0.8624567738764792).epsilon(1e-14));

    const auto r10 = inradius(10);
    CHECK(r10.s_inv_sq == doctest::Approx(1.5733274459105609).epsilon(1e-14));
    CHECK(*r10.lower < r10.s_inv_sq);
    CHECK(r10.s_inv_sq < *r10.upper);
}

TEST_CASE("report radius is the inverse square root of the sum") {
    for (std::int64_t m : {std::int64_t{1}, std::int64_t{2}, std::int64_t{7}, std::int64_t{100},
                           std::int64_t{12345}}) {
        const auto r = inradius(m);
        CHECK(std::fabs(r.s - 1.0 / std::sqrt(r.s_inv_sq)) <= 1e-14 * r.s);
    }
}

TEST_CASE("inradius input validation") {
    CHECK_THROWS_AS(inradius(0), std::invalid_argument);
    CHECK_THROWS_AS(inradius(-3), std::invalid_argument);
    CHECK_THROWS_AS(inradius(kMaxInradiusDim + 1), std::invalid_argument);
}

TEST_CASE("inradius is strictly decreasing in the dimension") {
    RunningInradius running;
    double prev = std::numeric_limits<double>::infinity();
    for (std::int64_t m = 1; m <= 200; ++m) {
        running.advance_to(m);
        const double s = running.report().s;
        CHECK(s < prev);
        prev = s;
    }
}

TEST_CASE("running sum matches the one-shot path") {
    RunningInradius running;
    for (std::int64_t m : {std::int64_t{2}, std::int64_t{100}, std::int64_t{4096},
                           std::int64_t{2000000}}) {
        running.advance_to(m);
        const double a = running.report().s_inv_sq;
        const double b = inradius(m).s_inv_sq;
        CHECK(std::fabs(a - b) <= 1e-13 * b);
    }
    CHECK_THROWS_AS(running.advance_to(5), std::invalid_argument);
}

TEST_CASE("compensated sum agrees with the double-double reference at m = 1e6") {
    const std::int64_t m = 1'000'000;
    const double reference = dd_sum_terms(m);
    CHECK(std::fabs(sum_terms_serial(m) - reference) <= 1e-13 * reference);
    CHECK(std::fabs(sum_terms_parallel(m) - reference) <= 1e-13 * reference);
}

TEST_CASE("chunk-parallel sum matches the serial reference at m = 1e7") {
    const std::int64_t m = 10'000'000;
    const double serial = sum_terms_serial(m);
    const double parallel = sum_terms_parallel(m);
    CHECK(std::fabs(serial - parallel) <= 1e-13 * serial);
}

#ifdef _OPENMP
TEST_CASE("chunk-parallel sum does not depend on the thread count") {
    const std::int64_t m = 5'000'000;
    const int saved = omp_get_max_threads();
    omp_set_num_threads(1);
    const double one = sum_terms_parallel(m);
    omp_set_num_threads(saved);
    const double many = sum_terms_parallel(m);
    CHECK(one == many);  // fixed chunk boundaries make this bitwise
}
#endif

TEST_CASE("sum equals the squared norm of the facet normal") {
    for (int m : {1, 2, 10, 100, 1000, 10000}) {
        const auto u = facet_normal(m);
        KahanAccumulator norm_sq;
        for (double c : u.coords) norm_sq.add(c * c);
        CHECK(std::fabs(norm_sq.value() - inradius(m).s_inv_sq) < 1e-12);
    }
}

TEST_CASE("harmonic numbers") {
    CHECK(harmonic(1) == 1.0);
    CHECK(harmonic(2) == 1.5);
    const double h = harmonic(1'000'000);
    CHECK(h == doctest::Approx(14.392726722865724).epsilon(1e-12));
    CHECK(h > 13.8155);
    CHECK(h < 14.8156);
    CHECK_THROWS_AS(harmonic(0), std::invalid_argument);
}

TEST_CASE("harmonic bound holds for every m up to 10^4") {
    KahanAccumulator r;
    r.add(1.0);
    for (std::int64_t m = 2; m <= 10'000; ++m) {
        r.add(1.0 / double(m));
        const double lg = std::log(double(m));
        CHECK(lg < r.value());
        CHECK(r.value() < lg + 1.0);
    }
}

TEST_CASE("bound chain check") {
    const auto c2 = bound_check(2);
    CHECK(c2.holds);
    CHECK(c2.s_inv_sq == doctest::Approx(1.1715728752538099).epsilon(1e-15));
    CHECK(c2.lower == doctest::Approx(0.1732867951399863).epsilon(1e-15));
    CHECK(c2.upper == doctest::Approx(1.4232867951399863).epsilon(1e-15));

    CHECK(bound_check(100).holds);
    CHECK(bound_check(1'000'000).holds);
    CHECK_THROWS_AS(bound_check(1), std::domain_error);
    CHECK_THROWS_AS(bound_check(0), std::domain_error);
}

TEST_CASE("asymptote ratio sits in the interval the bounds force") {
    const auto report = inradius(1'000'000);
    const auto check = asymptote_check(report);
    CHECK(check.holds);
    CHECK(check.ratio == doctest::Approx(0.8808433596899657).epsilon(1e-12));
    CHECK(check.ratio_lower == doctest::Approx(0.8568907719758482).epsilon(1e-12));
    CHECK(check.ratio_lower > 0.85);
    CHECK(check.ratio < 1.0);
}

TEST_CASE("bound sweep smoke run") {
    const auto sweep = bound_sweep(1000, {2000, 5000});
    CHECK(sweep.holds);
    CHECK(sweep.checked == 999 + 2);
    CHECK_THROWS_AS(bound_sweep(1000, {500}), std::invalid_argument);
    CHECK_THROWS_AS(bound_sweep(1, {}), std::domain_error);
}
