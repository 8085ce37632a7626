#include "nqpcd/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "nqpcd/gcd.hpp"
#include "nqpcd/rng.hpp"
#include "solver_detail.hpp"

namespace nqpcd {

namespace {

// Shared loop for cyclic and randomized CD: `pick` supplies the coordinate
// for each visit; delta is refreshed at epoch boundaries only.
template <class PickFn>
SolveReport sweep_solve(const NqpProblem& prob, const Vector& x0, const BaselineOptions& opts,
                        PickFn&& pick) {
    detail::check_solver_inputs(prob, x0, opts.eps);
    const std::size_t n = prob.size();
    const std::uint64_t budget = opts.max_updates ? opts.max_updates : 1000 * n;

    Stopwatch clock;
    GcdState st = init_state(prob, x0);
    SolveReport rep;
    auto record = [&] {
        rep.trace.push_back({static_cast<double>(st.updates) / n, st.updates, clock.seconds(),
                             nqp_objective(prob, st.x), st.delta});
    };
    record();

    while (st.delta > opts.eps && st.updates < budget) {
        for (std::size_t v = 0; v < n && st.updates < budget; ++v) {
            const std::size_t i = pick(v);
            apply_update(st, prob, i, coordinate_candidate(st, prob, i).xhat);
        }
        st.delta = kkt_residual(st.x, st.g);
        record();
    }

    rep.x = std::move(st.x);
    rep.objective = rep.trace.back().objective;
    rep.delta = st.delta;
    rep.updates = st.updates;
    rep.converged = st.delta <= opts.eps;
    rep.flops = st.flops;
    return rep;
}

}  // namespace

SolveReport cyclic_solve(const NqpProblem& prob, const Vector& x0, const BaselineOptions& opts) {
    return sweep_solve(prob, x0, opts, [](std::size_t v) { return v; });
}

SolveReport randomized_solve(const NqpProblem& prob, const Vector& x0,
                             const BaselineOptions& opts) {
    SplitMix64 rng(opts.rng_seed);
    const std::size_t n = prob.size();
    return sweep_solve(prob, x0, opts, [&rng, n](std::size_t) { return rng.next_below(n); });
}

double power_iteration_lmax(const DenseMatrix& P, std::uint64_t iters, double tol) {
    if (P.rows() != P.cols()) throw std::invalid_argument("power_iteration_lmax: P not square");
    const std::size_t n = P.rows();

    // Fixed seeded start with strictly positive entries; any deterministic
    // vector with a component along the dominant eigenvector works.
    SplitMix64 rng(0x9E3779B97F4A7C15ULL);
    Vector v(n);
    for (auto& e : v) e = 0.5 + rng.next_uniform();
    const double nv = norm2(v);
    for (auto& e : v) e /= nv;

    double lam = 0.0;
    for (std::uint64_t k = 0; k < iters; ++k) {
        const Vector w = matvec(P, v);
        const double next = dot(std::span<const double>(v), std::span<const double>(w));
        const double nw = norm2(w);
        if (nw == 0.0) return 0.0;
        for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / nw;
        const bool settled = k > 0 && std::abs(next - lam) <= tol * std::max(1.0, std::abs(next));
        lam = next;
        if (settled) break;
    }
    return lam;
}

SolveReport fista_solve(const NqpProblem& prob, const Vector& x0, const BaselineOptions& opts) {
    detail::check_solver_inputs(prob, x0, opts.eps);
    const std::size_t n = prob.size();
    const std::uint64_t budget =
        opts.fista_max_iters ? opts.fista_max_iters : std::max<std::uint64_t>(10000, 100 * n);

    Stopwatch clock;
    const double lmax = power_iteration_lmax(prob.P, opts.power_iters, opts.power_tol);
    if (lmax == 0.0) throw std::runtime_error("fista_solve: zero curvature estimate");
    const double step = 1.0 / (lmax * (1.0 + 10.0 * opts.power_tol));

    Vector x = x0;
    Vector y = x0;
    Vector gx = nqp_gradient(prob, x);
    double delta = kkt_residual(x, gx);
    double t = 1.0;
    std::uint64_t iter = 0;

    SolveReport rep;
    // F(x) = 1/2 x'(g - d) + d'x reuses the gradient already in hand.
    auto objective = [&] {
        double acc = 0.0;
        for (std::size_t i = 0; i < n; ++i) acc += 0.5 * x[i] * (gx[i] + prob.d[i]);
        return acc;
    };
    auto record = [&] {
        rep.trace.push_back(
            {static_cast<double>(iter), iter, clock.seconds(), objective(), delta});
    };
    record();

    while (delta > opts.eps && iter < budget) {
        const Vector gy = nqp_gradient(prob, y);
        const double t_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * t * t));
        const double momentum = (t - 1.0) / t_next;
        for (std::size_t i = 0; i < n; ++i) {
            const double xi = std::max(0.0, y[i] - step * gy[i]);
            y[i] = xi + momentum * (xi - x[i]);
            x[i] = xi;
        }
        t = t_next;
        ++iter;
        gx = nqp_gradient(prob, x);
        delta = kkt_residual(x, gx);
        record();
    }

    rep.x = std::move(x);
    rep.objective = rep.trace.back().objective;
    rep.delta = delta;
    rep.updates = iter;
    rep.converged = delta <= opts.eps;
    return rep;
}

}  // namespace nqpcd
