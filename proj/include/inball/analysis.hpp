#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

// Closed-form inscribed-ball radius of C_m and the logarithmic bounds
// around it. The squared reciprocal radius is
//
//     s_m^{-2} = sum_{k=1..m} 1/(sqrt(k)+sqrt(k-1))^2
//
// (the squared norm of the canonical facet normal), and for m >= 2 it is
// pinched between (log m)/4 and (log m)/4 + 5/4, which forces
// s_m ~ 2/sqrt(log m).

namespace inball {

constexpr std::int64_t kMaxInradiusDim = 100'000'000;

struct InradiusReport {
    std::int64_t m = 0;
    double s = 0.0;
    double s_inv_sq = 0.0;
    // Defined for m >= 2 only; the log-based quantities degenerate at m = 1.
    std::optional<double> lower;      // (log m)/4
    std::optional<double> upper;      // (log m)/4 + 5/4
    std::optional<double> asymptote;  // 2/sqrt(log m)
};

// Inscribed-ball radius of C_m, 1 <= m <= kMaxInradiusDim. Terms are summed
// in increasing k with compensation; large m uses the deterministic
// chunk-parallel path.
InradiusReport inradius(std::int64_t m);

// k-th summand (sqrt(k)-sqrt(k-1))^2, evaluated in the cancellation-free
// form 1/(sqrt(k)+sqrt(k-1))^2.
double term(std::int64_t k);

// Harmonic number R_m = sum_{k<=m} 1/k, compensated. For m >= 2 it
// satisfies log m < R_m < log m + 1.
double harmonic(std::int64_t m);

// Serial reference for the inradius sum; the chunk-parallel path is checked
// against it in the tests.
double sum_terms_serial(std::int64_t m);
double sum_terms_parallel(std::int64_t m);

struct BoundCheck {
    bool holds = false;
    std::int64_t m = 0;
    double s_inv_sq = 0.0;
    double lower = 0.0;            // (log m)/4
    double upper = 0.0;            // (log m)/4 + 5/4
    double quarter_harmonic = 0.0; // R_m/4, the intermediate lower chain link
    double upper_chain = 0.0;      // 1 + (log m + 1)/4
    std::string details;           // empty when the check holds
};

// Evaluates the two-sided bound (log m)/4 < s^{-2} < (log m)/4 + 5/4 plus
// the intermediate links (log m)/4 < R_m/4 <= s^{-2} < 1 + (log m + 1)/4.
// Requires m >= 2.
BoundCheck bound_check(std::int64_t m);

// Incrementally extendable inradius sum, for sweeping many m in one pass.
class RunningInradius {
public:
    // Adds terms until the sum covers dimension m (monotone in m).
    void advance_to(std::int64_t m);
    std::int64_t dim() const { return m_; }
    double s_inv_sq() const { return sum_; }
    InradiusReport report() const;

private:
    std::int64_t m_ = 0;
    double sum_ = 0.0;
    double comp_ = 0.0;
};

struct SweepResult {
    bool holds = false;
    std::int64_t checked = 0;      // number of dimensions whose chain was evaluated
    std::int64_t first_violation = 0;
    std::string details;
};

// Runs bound_check's chain for every m in {2..dense_max} and then at each
// spot dimension, reusing one running compensated sum (and one running
// harmonic sum) across all of them. Spots must be increasing and > dense_max.
SweepResult bound_sweep(std::int64_t dense_max, const std::vector<std::int64_t>& spots);

// Ratio s_m * sqrt(log m) / 2 together with the interval the proven bounds
// force it into: (sqrt(log m/(log m + 5)), 1).
struct AsymptoteCheck {
    double ratio = 0.0;
    double ratio_lower = 0.0;
    bool holds = false;
};
AsymptoteCheck asymptote_check(const InradiusReport& report);

}  // namespace inball
