#include "nqpcd/alm.hpp"

#include <cmath>
#include <stdexcept>

#include "nqpcd/gcd.hpp"

namespace nqpcd::alm {

namespace {

double constrained_objective(const LinNqpProblem& prob, const Vector& x) {
    double acc = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
        acc += x[i] * (0.5 * dot(prob.Q.row(i), x) + prob.c[i]);
    return acc;
}

Vector constraint_residual(const LinNqpProblem& prob, const Vector& x) {
    Vector r = matvec(prob.A, x);
    for (std::size_t k = 0; k < r.size(); ++k) r[k] -= prob.b[k];
    return r;
}

}  // namespace

NqpProblem build_subproblem(const LinNqpProblem& prob, const Vector& y, double beta) {
    if (!(beta > 0.0)) throw std::invalid_argument("build_subproblem: beta must be positive");
    if (y.size() != prob.constraints())
        throw std::invalid_argument("build_subproblem: multiplier length does not match A");
    const std::size_t n = prob.size();
    const std::size_t m = prob.constraints();

    NqpProblem sub{DenseMatrix(n, n), Vector(n)};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            double aa = 0.0;
            for (std::size_t k = 0; k < m; ++k) aa += prob.A(k, i) * prob.A(k, j);
            const double v = 0.5 * (prob.Q(i, j) + prob.Q(j, i)) + beta * aa;
            sub.P(i, j) = v;
            sub.P(j, i) = v;
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        double ay = 0.0;
        double ab = 0.0;
        for (std::size_t k = 0; k < m; ++k) {
            ay += prob.A(k, i) * y[k];
            ab += prob.A(k, i) * prob.b[k];
        }
        sub.d[i] = prob.c[i] + ay - beta * ab;
    }
    return sub;
}

Vector multiplier_update(const Vector& y, const DenseMatrix& A, const Vector& x, const Vector& b,
                         double beta) {
    if (y.size() != A.rows() || b.size() != A.rows() || x.size() != A.cols())
        throw std::invalid_argument("multiplier_update: dimension mismatch");
    Vector next(y.size());
    for (std::size_t k = 0; k < y.size(); ++k)
        next[k] = y[k] + beta * (dot(A.row(k), x) - b[k]);
    return next;
}

AlmReport solve(const LinNqpProblem& prob, const Vector& x0, const AlmOptions& opts) {
    if (auto r = validate(prob); !r.ok) throw std::invalid_argument("alm::solve: " + r.message);
    if (x0.size() != prob.size())
        throw std::invalid_argument("alm::solve: x0 length does not match problem");
    for (double v : x0)
        if (v < 0.0) throw std::invalid_argument("alm::solve: x0 must be nonnegative");
    if (!(opts.eps > 0.0) || !(opts.beta0 > 0.0) || opts.growth < 1.0 || opts.max_outer < 1)
        throw std::invalid_argument("alm::solve: invalid options");

    ToleranceSchedule schedule = opts.eps_k;
    if (schedule.value == 0.0) schedule.value = std::min(opts.eps, 1e-3);

    Stopwatch clock;
    Vector x = x0;
    Vector y(prob.constraints(), 0.0);
    double beta = opts.beta0;

    AlmReport rep;
    bool inner_ok = false;
    double primal = 0.0;
    for (std::size_t outer = 0; outer < opts.max_outer; ++outer) {
        const double eps_k = std::min(schedule.at(outer), opts.eps);
        const NqpProblem sub = build_subproblem(prob, y, beta);
        const SolveReport inner = greedy_solve(sub, x, {eps_k, opts.inner_max_updates, 0});
        x = inner.x;
        inner_ok = inner.converged;
        rep.inner_updates += inner.updates;
        rep.dual_residuals.push_back(inner.delta);
        rep.betas.push_back(beta);
        rep.dual_residual_bound = eps_k;

        y = multiplier_update(y, prob.A, x, prob.b, beta);
        primal = norm2(constraint_residual(prob, x));
        rep.trace.push_back({static_cast<double>(outer), rep.inner_updates, clock.seconds(),
                             constrained_objective(prob, x), primal});
        rep.outer_iterations = outer + 1;
        if (primal <= opts.eps && inner_ok) break;
        beta = std::min(opts.beta_max, opts.growth * beta);
    }

    rep.objective = constrained_objective(prob, x);
    rep.primal_residual = primal;
    rep.converged = primal <= opts.eps && inner_ok;
    rep.x = std::move(x);
    rep.y = std::move(y);
    return rep;
}

}  // namespace nqpcd::alm
