#include "nqpcd/gcd.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "solver_detail.hpp"

namespace nqpcd {

namespace {

struct Best {
    std::size_t index = 0;
    Candidate cand;
};

// One selection sweep over the maintained gradient; O(n).
Best best_candidate(GcdState& state, const NqpProblem& prob) {
    const std::size_t n = state.x.size();
    Best best{0, coordinate_candidate(state, prob, 0)};
    for (std::size_t i = 1; i < n; ++i) {
        const Candidate c = coordinate_candidate(state, prob, i);
        if (c.decrease < best.cand.decrease) best = {i, c};
    }
    state.flops += 8 * n;
    return best;
}

void track_gradient_deviation(const GcdState& state, const NqpProblem& prob, double& worst) {
    const Vector gtrue = nqp_gradient(prob, state.x);
    double dev = 0.0;
    double gmax = 0.0;
    for (std::size_t i = 0; i < state.g.size(); ++i) {
        dev = std::max(dev, std::abs(state.g[i] - gtrue[i]));
        gmax = std::max(gmax, std::abs(state.g[i]));
    }
    worst = std::max(worst, dev / (1.0 + gmax));
}

}  // namespace

GcdState init_state(const NqpProblem& prob, const Vector& x0) {
    GcdState st;
    st.x = x0;
    st.g = nqp_gradient(prob, x0);
    st.delta = kkt_residual(st.x, st.g);
    const std::uint64_t n = x0.size();
    st.flops = 2 * n * n + 3 * n;
    return st;
}

Candidate coordinate_candidate(const GcdState& state, const NqpProblem& prob, std::size_t i) {
    const double pii = prob.P(i, i);
    const double gi = state.g[i];
    const double xhat = std::max(0.0, state.x[i] - gi / pii);
    const double dx = xhat - state.x[i];
    return {xhat, gi * dx + 0.5 * pii * dx * dx};
}

std::size_t select_coordinate(GcdState& state, const NqpProblem& prob) {
    return best_candidate(state, prob).index;
}

void apply_update(GcdState& state, const NqpProblem& prob, std::size_t i, double xhat) {
    const std::size_t n = state.x.size();
    if (i >= n) throw std::out_of_range("apply_update: coordinate index out of range");
    const double dx = xhat - state.x[i];
    state.x[i] = xhat;
    if (dx != 0.0) {
        // g += dx * p_i, the only O(n) cost of the update.
        for (std::size_t j = 0; j < n; ++j) state.g[j] += dx * prob.P(j, i);
        state.flops += 2 * n + 1;
    } else {
        state.flops += 1;
    }
    ++state.updates;
}

double kkt_residual(const Vector& x, const Vector& g) {
    if (x.size() != g.size()) throw std::invalid_argument("kkt_residual: dimension mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double v = (x[i] == 0.0) ? std::min(0.0, g[i]) : g[i];
        s += v * v;
    }
    return std::sqrt(s);
}

SolveReport greedy_solve(const NqpProblem& prob, const Vector& x0, const GcdOptions& opts) {
    detail::check_solver_inputs(prob, x0, opts.eps);
    const std::size_t n = prob.size();
    const std::uint64_t budget = opts.max_updates ? opts.max_updates : 1000 * n;
    const std::uint64_t check_every = opts.gradient_check_interval ? opts.gradient_check_interval : n;

    Stopwatch clock;
    GcdState st = init_state(prob, x0);
    SolveReport rep;
    auto record = [&] {
        rep.trace.push_back({static_cast<double>(st.updates) / n, st.updates, clock.seconds(),
                             nqp_objective(prob, st.x), st.delta});
    };
    record();

    while (st.delta > opts.eps && st.updates < budget) {
        const Best best = best_candidate(st, prob);
        apply_update(st, prob, best.index, best.cand.xhat);
        st.delta = kkt_residual(st.x, st.g);
        st.flops += 2 * n + 1;
        if (st.updates % check_every == 0)
            track_gradient_deviation(st, prob, rep.max_gradient_deviation);
        if (st.updates % n == 0) record();
    }
    if (st.updates % n != 0) record();

    rep.x = std::move(st.x);
    rep.objective = rep.trace.back().objective;
    rep.delta = st.delta;
    rep.updates = st.updates;
    rep.converged = st.delta <= opts.eps;
    rep.flops = st.flops;
    return rep;
}

}  // namespace nqpcd
