#include "inball/analysis.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "inball/summation.hpp"

namespace inball {
namespace {

void require_dim(std::int64_t m) {
    if (m < 1) throw std::invalid_argument("dimension must be >= 1");
    if (m > kMaxInradiusDim)
        throw std::invalid_argument("dimension must be <= " + std::to_string(kMaxInradiusDim));
}

InradiusReport report_from_sum(std::int64_t m, double s_inv_sq) {
    InradiusReport r;
    r.m = m;
    r.s_inv_sq = s_inv_sq;
    r.s = 1.0 / std::sqrt(s_inv_sq);
    if (m >= 2) {
        const double lg = std::log(double(m));
        r.lower = 0.25 * lg;
        r.upper = 0.25 * lg + 1.25;
        r.asymptote = 2.0 / std::sqrt(lg);
    }
    return r;
}

}  // namespace

double term(std::int64_t k) {
    if (k < 1) throw std::out_of_range("term index must be >= 1");
    const double r = std::sqrt(double(k)) + std::sqrt(double(k - 1));
    return 1.0 / (r * r);
}

double sum_terms_serial(std::int64_t m) {
    require_dim(m);
    return kahan_sum_serial(1, m, term);
}

double sum_terms_parallel(std::int64_t m) {
    require_dim(m);
    return kahan_sum_chunked(1, m, term);
}

InradiusReport inradius(std::int64_t m) {
    require_dim(m);
    return report_from_sum(m, kahan_sum_chunked(1, m, term));
}

double harmonic(std::int64_t m) {
    require_dim(m);
    return kahan_sum_chunked(1, m, [](std::int64_t k) { return 1.0 / double(k); });
}

BoundCheck bound_check(std::int64_t m) {
    if (m < 2) throw std::domain_error("bound chain requires m >= 2 (log 1 = 0 degenerates it)");
    require_dim(m);

    BoundCheck c;
    c.m = m;
    c.s_inv_sq = kahan_sum_chunked(1, m, term);
    const double lg = std::log(double(m));
    c.lower = 0.25 * lg;
    c.upper = 0.25 * lg + 1.25;
    c.quarter_harmonic = 0.25 * harmonic(m);
    c.upper_chain = 1.0 + 0.25 * (lg + 1.0);

    std::ostringstream details;
    if (!(c.lower < c.s_inv_sq)) details << "lower bound violated; ";
    if (!(c.s_inv_sq < c.upper)) details << "upper bound violated; ";
    if (!(c.lower < c.quarter_harmonic)) details << "harmonic lower link violated; ";
    if (!(c.quarter_harmonic <= c.s_inv_sq)) details << "harmonic-to-sum link violated; ";
    if (!(c.s_inv_sq < c.upper_chain)) details << "upper chain link violated; ";
    c.details = details.str();
    c.holds = c.details.empty();
    return c;
}

void RunningInradius::advance_to(std::int64_t m) {
    require_dim(m);
    if (m < m_) throw std::invalid_argument("running sum cannot move backwards");
    for (std::int64_t k = m_ + 1; k <= m; ++k) {
        const double y = term(k) - comp_;
        const double t = sum_ + y;
        comp_ = (t - sum_) - y;
        sum_ = t;
    }
    m_ = m;
}

InradiusReport RunningInradius::report() const {
    if (m_ < 1) throw std::logic_error("running sum has not been advanced yet");
    return report_from_sum(m_, sum_);
}

SweepResult bound_sweep(std::int64_t dense_max, const std::vector<std::int64_t>& spots) {
    if (dense_max < 2) throw std::domain_error("bound sweep requires dense_max >= 2");
    std::int64_t prev = dense_max;
    for (std::int64_t s : spots) {
        if (s <= prev) throw std::invalid_argument("spot dimensions must be increasing and beyond dense_max");
        prev = s;
    }
    require_dim(prev);

    KahanAccumulator sum;       // running s^{-2}
    KahanAccumulator harmonic;  // running R_m
    sum.add(term(1));
    harmonic.add(1.0);
    std::int64_t m = 1;

    SweepResult result;
    result.holds = true;

    auto check_at = [&](std::int64_t target) {
        while (m < target) {
            ++m;
            sum.add(term(m));
            harmonic.add(1.0 / double(m));
        }
        const double lg = std::log(double(m));
        const double lower = 0.25 * lg;
        const double upper = 0.25 * lg + 1.25;
        const double quarter_r = 0.25 * harmonic.value();
        const double q = sum.value();
        const bool ok = lower < q && q < upper && lower < quarter_r && quarter_r <= q &&
                        q < 1.0 + 0.25 * (lg + 1.0);
        ++result.checked;
        if (!ok && result.holds) {
            result.holds = false;
            result.first_violation = m;
            std::ostringstream details;
            details << "chain violated at m=" << m << ": lower=" << lower << " s_inv_sq=" << q
                    << " upper=" << upper;
            result.details = details.str();
        }
    };

    for (std::int64_t d = 2; d <= dense_max; ++d) check_at(d);
    for (std::int64_t s : spots) check_at(s);
    return result;
}

AsymptoteCheck asymptote_check(const InradiusReport& report) {
    if (report.m < 2) throw std::domain_error("asymptote ratio requires m >= 2");
    const double lg = std::log(double(report.m));
    AsymptoteCheck c;
    c.ratio = report.s * std::sqrt(lg) / 2.0;
    c.ratio_lower = std::sqrt(lg / (lg + 5.0));
    c.holds = c.ratio_lower < c.ratio && c.ratio < 1.0;
    return c;
}

}  // namespace inball
