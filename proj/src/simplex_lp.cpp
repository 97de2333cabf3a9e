#include "inball/simplex_lp.hpp"

#include <cmath>
#include <stdexcept>

namespace inball {
namespace {

// Tableau for minimization. Row `rows` is the reduced-cost row; column
// `cols` is the rhs. Entering variable: smallest column index with negative
// reduced cost; leaving variable: smallest basic index among ratio-test
// ties (Bland's rule on both ends, which rules out cycling).
struct Tableau {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<double>> t;
    std::vector<int> basis;

    double& at(int r, int c) { return t[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; }
    double at(int r, int c) const { return t[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; }

    void pivot(int pr, int pc) {
        const double inv = 1.0 / at(pr, pc);
        for (int c = 0; c <= cols; ++c) at(pr, c) *= inv;
        at(pr, pc) = 1.0;
        for (int r = 0; r <= rows; ++r) {
            if (r == pr) continue;
            const double f = at(r, pc);
            if (f == 0.0) continue;
            for (int c = 0; c <= cols; ++c) at(r, c) -= f * at(pr, c);
            at(r, pc) = 0.0;
        }
        basis[static_cast<std::size_t>(pr)] = pc;
    }

    // Runs Bland pivots until optimal (true) or unbounded (false).
    // Columns >= enterable_limit never enter.
    bool iterate(int enterable_limit) {
        for (;;) {
            int enter = -1;
            for (int c = 0; c < enterable_limit; ++c) {
                if (at(rows, c) < -kLpTol) {
                    enter = c;
                    break;
                }
            }
            if (enter < 0) return true;

            int leave = -1;
            double best = 0.0;
            for (int r = 0; r < rows; ++r) {
                const double a = at(r, enter);
                if (a <= kLpTol) continue;
                const double ratio = at(r, cols) / a;
                if (leave < 0 || ratio < best - kLpTol ||
                    (ratio <= best + kLpTol &&
                     basis[static_cast<std::size_t>(r)] < basis[static_cast<std::size_t>(leave)])) {
                    leave = r;
                    best = ratio;
                }
            }
            if (leave < 0) return false;
            pivot(leave, enter);
        }
    }
};

}  // namespace

LpSolution solve_max(const LpProblem& lp) {
    int m = static_cast<int>(lp.a.size());
    const int n = static_cast<int>(lp.c.size());
    if (static_cast<int>(lp.b.size()) != m)
        throw std::invalid_argument("rhs length does not match constraint count");
    for (const auto& row : lp.a)
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("constraint row length does not match objective length");

    // Columns: n structural, m slacks, then one artificial per row whose rhs
    // had to be sign-flipped.
    int n_artificial = 0;
    for (double bi : lp.b) n_artificial += (bi < 0.0);

    Tableau tab;
    tab.rows = m;
    tab.cols = n + m + n_artificial;
    tab.t.assign(static_cast<std::size_t>(m + 1),
                 std::vector<double>(static_cast<std::size_t>(tab.cols + 1), 0.0));
    tab.basis.assign(static_cast<std::size_t>(m), -1);

    int next_artificial = n + m;
    for (int r = 0; r < m; ++r) {
        const double flip = lp.b[static_cast<std::size_t>(r)] < 0.0 ? -1.0 : 1.0;
        for (int c = 0; c < n; ++c)
            tab.at(r, c) = flip * lp.a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        tab.at(r, n + r) = flip;  // slack
        tab.at(r, tab.cols) = flip * lp.b[static_cast<std::size_t>(r)];
        if (flip < 0.0) {
            tab.at(r, next_artificial) = 1.0;
            tab.basis[static_cast<std::size_t>(r)] = next_artificial;
            ++next_artificial;
        } else {
            tab.basis[static_cast<std::size_t>(r)] = n + r;
        }
    }

    if (n_artificial > 0) {
        // Phase 1: minimize the sum of artificials. Zero out the reduced
        // costs of the (basic) artificial columns.
        for (int c = n + m; c < tab.cols; ++c) tab.at(m, c) = 1.0;
        for (int r = 0; r < m; ++r) {
            if (tab.basis[static_cast<std::size_t>(r)] < n + m) continue;
            for (int c = 0; c <= tab.cols; ++c) tab.at(m, c) -= tab.at(r, c);
        }
        tab.iterate(tab.cols);  // bounded below by zero, cannot be unbounded
        const double infeasibility = -tab.at(m, tab.cols);
        if (infeasibility > kLpTol) return {LpStatus::infeasible, {}, 0.0};

        // Degenerate basic artificials: pivot them onto a structural or
        // slack column, or drop the (redundant) row.
        for (int r = 0; r < m; ++r) {
            if (tab.basis[static_cast<std::size_t>(r)] < n + m) continue;
            int pc = -1;
            for (int c = 0; c < n + m; ++c) {
                if (std::fabs(tab.at(r, c)) > kLpTol) {
                    pc = c;
                    break;
                }
            }
            if (pc >= 0) {
                tab.pivot(r, pc);
            } else {
                tab.t.erase(tab.t.begin() + r);
                tab.basis.erase(tab.basis.begin() + r);
                --tab.rows;
                --m;
                --r;
            }
        }
    }

    // Phase 2: minimize -c.x over the feasible tableau.
    for (int c = 0; c <= tab.cols; ++c) tab.at(m, c) = 0.0;
    for (int c = 0; c < n; ++c) tab.at(m, c) = -lp.c[static_cast<std::size_t>(c)];
    for (int r = 0; r < m; ++r) {
        const double f = tab.at(m, tab.basis[static_cast<std::size_t>(r)]);
        if (f == 0.0) continue;
        for (int c = 0; c <= tab.cols; ++c) tab.at(m, c) -= f * tab.at(r, c);
    }

    if (!tab.iterate(n + static_cast<int>(lp.a.size())))  // artificials may not re-enter
        return {LpStatus::unbounded, {}, 0.0};

    LpSolution sol;
    sol.status = LpStatus::optimal;
    sol.x.assign(static_cast<std::size_t>(n), 0.0);
    for (int r = 0; r < m; ++r) {
        const int b = tab.basis[static_cast<std::size_t>(r)];
        if (b < n) sol.x[static_cast<std::size_t>(b)] = tab.at(r, tab.cols);
    }
    for (int c = 0; c < n; ++c)
        sol.objective += lp.c[static_cast<std::size_t>(c)] * sol.x[static_cast<std::size_t>(c)];
    return sol;
}

}  // namespace inball
