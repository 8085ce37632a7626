#pragma once

#include <cstdint>

#include "nqpcd/model.hpp"
#include "nqpcd/solve_report.hpp"

namespace nqpcd {

struct BaselineOptions {
    double eps = 1e-6;
    std::uint64_t max_updates = 0;     ///< 0: defaults to 1000*n coordinate visits
    std::uint64_t rng_seed = 0;        ///< randomized CD only
    std::uint64_t fista_max_iters = 0;  ///< 0: defaults to max(10000, 100*n)
    std::uint64_t power_iters = 100;
    double power_tol = 1e-6;
};

/// Cyclic CD: visit coordinates 0..n-1 round-robin, exact 1-D minimization
/// with gradient maintenance per visit; convergence is tested at epoch
/// boundaries.
SolveReport cyclic_solve(const NqpProblem& prob, const Vector& x0, const BaselineOptions& opts);

/// Randomized CD: i.i.d. uniform coordinate choice from a seeded SplitMix64
/// stream; the same seed reproduces the iterate sequence exactly.
SolveReport randomized_solve(const NqpProblem& prob, const Vector& x0, const BaselineOptions& opts);

/// Largest-eigenvalue estimate by power iteration with a fixed seeded start
/// vector. Returns a Rayleigh quotient, hence a lower bound on lambda_max of
/// a symmetric PSD matrix; returns 0 for the zero matrix.
double power_iteration_lmax(const DenseMatrix& P, std::uint64_t iters = 100, double tol = 1e-6);

/// FISTA with projection onto x >= 0, constant step 1/(lmax*(1+10*tol)) from
/// the power-iteration estimate, momentum t_{k+1} = (1+sqrt(1+4t_k^2))/2, no
/// restarts. One iteration counts as one epoch in the trace. Stops on the
/// same KKT residual as the CD solvers, evaluated at the primary iterate.
SolveReport fista_solve(const NqpProblem& prob, const Vector& x0, const BaselineOptions& opts);

}  // namespace nqpcd
