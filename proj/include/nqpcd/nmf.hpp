#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "nqpcd/model.hpp"
#include "nqpcd/rng.hpp"
#include "nqpcd/solve_report.hpp"

namespace nqpcd::nmf {

struct NmfOptions {
    ToleranceSchedule eps_k{ToleranceSchedule::Kind::Constant, 1e-3};  ///< per-row GCD tolerance
    double fit_tol = 1e-3;            ///< stop once ||XY' - M||_F / ||M||_F <= fit_tol
    std::size_t max_outer = 100;
    double rescale_floor = 1e-12;     ///< columns with a norm below this skip rescaling
    std::uint64_t rng_seed = 0;       ///< initialization and zero-column reseeding
    double reseed_floor = 1e-12;      ///< minimum subproblem diagonal ||f_i||^2
    bool rescale = true;              ///< ablation switch for the norm balancing
    bool check_rescale = false;       ///< record per-rescale product drift and norm mismatch
    std::uint64_t inner_max_updates = 0;  ///< per-row GCD budget; 0: 1000*r
};

struct NmfReport {
    DenseMatrix X;  ///< m x r, >= 0
    DenseMatrix Y;  ///< n x r, >= 0
    double fit = 0.0;
    bool fit_is_absolute = false;  ///< ||M||_F = 0: fit holds ||XY'-M||_F itself
    double objective = 0.0;        ///< 1/2 ||XY' - M||_F^2
    std::size_t outer_iterations = 0;
    bool converged = false;
    std::vector<TraceRow> trace;   ///< per outer iteration; residual = fit

    /// 1/2 ||XY' - M||_F^2 measured after every row-solve sweep (two per
    /// outer iteration); nonincreasing up to floating-point noise.
    std::vector<double> half_step_objectives;

    // Populated when check_rescale is set.
    double max_rescale_norm_mismatch = 0.0;
    double max_rescale_product_drift = 0.0;

    std::uint64_t inner_updates = 0;
};

/// Balance paired column norms to their geometric mean: columns i with
/// ||x_i|| and ||y_i|| both >= floor become x_i*sqrt(||y_i||/||x_i||) and
/// y_i*sqrt(||x_i||/||y_i||), leaving X Y' unchanged; other columns are
/// left untouched.
void rescale_pair(DenseMatrix& X, DenseMatrix& Y, double floor);

/// The p independent row subproblems min_{z>=0} 1/2 z'Pz + d_i'z induced by
/// the fixed factor: P = F'F and D = -F'M_block with d_i the i-th column.
struct RowSubproblems {
    DenseMatrix P;  ///< r x r
    DenseMatrix D;  ///< r x p
};

/// Builds P and D for min_Z 1/2 ||F Z - M_block||_F^2 over Z >= 0 (columns
/// of Z are the p row iterates of the free factor). Numerically zero
/// columns of F (||f_i||^2 < reseed_floor) are reseeded with uniform(0,1)*1e-3
/// entries from `rng` first, so the subproblem diagonal is always positive.
RowSubproblems build_row_subproblems(DenseMatrix& F, const DenseMatrix& M_block,
                                     double reseed_floor, SplitMix64& rng);

/// Alternating minimization: per outer iteration rescale, solve the m
/// X-rows by greedy CD warm-started from the previous iterate, rescale,
/// then the n Y-rows. Stops once the fit reaches fit_tol or max_outer runs
/// out. `init` supplies (X0, Y0); otherwise both factors are initialized
/// i.i.d. uniform(0,1) from the seed.
NmfReport altmin_solve(const NmfProblem& prob, const NmfOptions& opts,
                       const std::optional<std::pair<DenseMatrix, DenseMatrix>>& init = {});

}  // namespace nqpcd::nmf
