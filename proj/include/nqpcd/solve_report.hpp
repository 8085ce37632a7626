#pragma once

#include <chrono>
#include <cstdint>
#include <vector>

#include "nqpcd/dense.hpp"

namespace nqpcd {

struct Stopwatch {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

/// Subproblem tolerance schedule: a constant value, or value/2^k to drive
/// subproblem residuals to zero across outer iterations.
struct ToleranceSchedule {
    enum class Kind { Constant, Halving };

    Kind kind = Kind::Constant;
    double value = 0.0;

    double at(std::size_t k) const {
        if (kind == Kind::Constant) return value;
        return value / static_cast<double>(1ULL << (k < 62 ? k : 62));
    }
};

/// One convergence-trace sample. `epoch` is the fair cost unit shared by
/// all solvers: n coordinate updates, one FISTA iteration, or one outer
/// iteration; fractional when a run stops mid-epoch. `residual` is the KKT
/// residual delta for NQP solvers, ||Ax-b|| for ALM, the fit for NMF.
struct TraceRow {
    double epoch = 0.0;
    std::uint64_t updates = 0;
    double time_sec = 0.0;
    double objective = 0.0;
    double residual = 0.0;
};

struct SolveReport {
    Vector x;
    double objective = 0.0;
    double delta = 0.0;
    std::uint64_t updates = 0;
    bool converged = false;
    std::vector<TraceRow> trace;

    // Instrumentation: arithmetic operations spent in the update path, and
    // the worst relative deviation of the maintained gradient seen at the
    // periodic consistency checks.
    std::uint64_t flops = 0;
    double max_gradient_deviation = 0.0;
};

}  // namespace nqpcd
