#pragma once

#include <cstdint>

#include "nqpcd/model.hpp"
#include "nqpcd/solve_report.hpp"

namespace nqpcd {

/// Iterate of a coordinate-descent solve. The gradient g = Px + d is
/// maintained alongside x and renewed with one column axpy per update, so
/// a full selection sweep costs O(n) instead of O(n^2).
struct GcdState {
    Vector x;
    Vector g;
    std::uint64_t updates = 0;
    double delta = 0.0;

    // Arithmetic operations spent in the update path (instrumentation for
    // the coordinate-friendliness contract).
    std::uint64_t flops = 0;
};

struct GcdOptions {
    double eps = 1e-6;
    std::uint64_t max_updates = 0;            ///< 0: defaults to 1000*n
    std::uint64_t gradient_check_interval = 0;  ///< 0: defaults to n
};

/// Result of minimizing F restricted to coordinate i over x_i >= 0.
struct Candidate {
    double xhat = 0.0;     ///< max(0, x_i - g_i / P_ii)
    double decrease = 0.0;  ///< g_i*(xhat - x_i) + P_ii/2*(xhat - x_i)^2, always <= 0
};

/// State with g = Px0 + d computed from scratch and delta set.
GcdState init_state(const NqpProblem& prob, const Vector& x0);

Candidate coordinate_candidate(const GcdState& state, const NqpProblem& prob, std::size_t i);

/// Index of the largest objective decrease; ties go to the smallest index.
std::size_t select_coordinate(GcdState& state, const NqpProblem& prob);

/// Sets x_i to xhat and renews g with one column axpy; never touches the
/// rest of x and never performs a full matrix-vector product.
void apply_update(GcdState& state, const NqpProblem& prob, std::size_t i, double xhat);

/// KKT residual of min_{x>=0} F: sqrt of sum of min(0, g_i)^2 over x_i = 0
/// plus g_i^2 over x_i > 0. Zero exactly at optimal points.
double kkt_residual(const Vector& x, const Vector& g);

/// Greedy coordinate descent: select the best coordinate by objective
/// decrease, update it, renew g, and stop once the KKT residual is at most
/// opts.eps or the update budget runs out (converged=false then; the
/// current iterate is still the best one seen since updates never increase
/// the objective). Warm-startable from any x0 >= 0.
SolveReport greedy_solve(const NqpProblem& prob, const Vector& x0, const GcdOptions& opts);

}  // namespace nqpcd
