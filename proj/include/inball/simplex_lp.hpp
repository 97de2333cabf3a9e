#pragma once

#include <vector>

// Dense two-phase simplex solver for
//
//     maximize c.x   subject to   A x <= b,  x >= 0,
//
// with Bland's anti-cycling pivot rule throughout. Small and
// self-contained on purpose: the Chebyshev-center instances it exists for
// have at most a few hundred rows and a handful of columns, and keeping the
// solver in-repo keeps the geometric oracle independent of outside code.

namespace inball {

enum class LpStatus { optimal, unbounded, infeasible };

struct LpSolution {
    LpStatus status = LpStatus::infeasible;
    std::vector<double> x;  // primal solution, valid when status == optimal
    double objective = 0.0;
};

struct LpProblem {
    std::vector<std::vector<double>> a;  // row-major, rows x cols
    std::vector<double> b;               // rhs, one per row
    std::vector<double> c;               // objective, one per column
};

inline constexpr double kLpTol = 1e-10;

LpSolution solve_max(const LpProblem& lp);

}  // namespace inball
