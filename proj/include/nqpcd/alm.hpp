#pragma once

#include <algorithm>
#include <cstdint>

#include "nqpcd/model.hpp"
#include "nqpcd/solve_report.hpp"

namespace nqpcd::alm {

struct AlmOptions {
    double eps = 1e-3;             ///< stop once ||Ax - b|| <= eps
    ToleranceSchedule eps_k;       ///< per-subproblem KKT tolerance, clamped to <= eps;
                                   ///< value 0 defaults to min(eps, 1e-3)
    double beta0 = 1.0;
    double growth = 2.0;           ///< beta_{k+1} = min(beta_max, growth*beta_k)
    double beta_max = 1e8;
    std::size_t max_outer = 100;
    std::uint64_t inner_max_updates = 0;  ///< per-outer GCD budget; 0: 1000*n
};

struct AlmReport {
    Vector x;
    Vector y;
    double objective = 0.0;        ///< F(x) = 1/2 x'Qx + c'x
    double primal_residual = 0.0;  ///< ||Ax - b||
    double dual_residual_bound = 0.0;  ///< last eps_k
    std::size_t outer_iterations = 0;
    bool converged = false;
    std::vector<TraceRow> trace;   ///< per outer iteration; residual = ||Ax - b||

    // Per-outer diagnostics: subproblem KKT residual at exit (the actual
    // dual certificate) and the penalty in effect.
    std::vector<double> dual_residuals;
    std::vector<double> betas;
    std::uint64_t inner_updates = 0;
};

/// Augmented-Lagrangian subproblem min_{x>=0} 1/2 x'Px + d'x with
/// P = Q + beta A'A (mirrored to exact symmetry) and d = c + A'y - beta A'b.
NqpProblem build_subproblem(const LinNqpProblem& prob, const Vector& y, double beta);

/// y' = y + beta (Ax - b).
Vector multiplier_update(const Vector& y, const DenseMatrix& A, const Vector& x, const Vector& b,
                         double beta);

/// Inexact ALM: each outer iteration solves the penalized NQP by greedy CD
/// warm-started from the previous iterate (so the subproblem KKT residual,
/// hence the dual residual, is at most eps_k), ascends the multiplier, and
/// grows beta geometrically. Stops once ||Ax - b|| <= eps; converged=false
/// when max_outer runs out or an inner solve exhausts its budget.
AlmReport solve(const LinNqpProblem& prob, const Vector& x0, const AlmOptions& opts);

}  // namespace nqpcd::alm
