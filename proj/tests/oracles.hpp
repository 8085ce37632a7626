#pragma once

// Independent reference implementations the tests check the solvers
// against. Everything here recomputes from first principles (plain loops,
// brute-force enumeration, Eigen factorizations) and never calls into the
// solver code paths it verifies.

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <vector>

#include "nqpcd/model.hpp"

namespace oracles {

using nqpcd::DenseMatrix;
using nqpcd::NqpProblem;
using nqpcd::Vector;

// Term-by-term summation of 1/2 sum_ij x_i P_ij x_j + sum_i d_i x_i.
inline double naive_objective(const NqpProblem& prob, const Vector& x) {
    const std::size_t n = x.size();
    double quad = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) quad += x[i] * prob.P(i, j) * x[j];
    double lin = 0.0;
    for (std::size_t i = 0; i < n; ++i) lin += prob.d[i] * x[i];
    return 0.5 * quad + lin;
}

// Column-accumulation matrix-vector product, y += x_j * p_j.
inline Vector naive_matvec(const DenseMatrix& A, const Vector& x) {
    Vector y(A.rows(), 0.0);
    for (std::size_t j = 0; j < A.cols(); ++j)
        for (std::size_t i = 0; i < A.rows(); ++i) y[i] += A(i, j) * x[j];
    return y;
}

inline Vector naive_gradient(const NqpProblem& prob, const Vector& x) {
    Vector g = naive_matvec(prob.P, x);
    for (std::size_t i = 0; i < g.size(); ++i) g[i] += prob.d[i];
    return g;
}

inline Eigen::MatrixXd to_eigen(const DenseMatrix& m) {
    Eigen::MatrixXd e(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) e(i, j) = m(i, j);
    return e;
}

struct ActiveSetSolution {
    Vector x;
    double objective = std::numeric_limits<double>::infinity();
};

// Brute-force exact NQP solver for small n: fix every subset of coordinates
// at zero, solve the unconstrained equality system on the complement, keep
// the best feasible stationary point. The all-zero point is always a
// candidate.
inline ActiveSetSolution active_set_minimum(const NqpProblem& prob) {
    const std::size_t n = prob.size();
    ActiveSetSolution best;
    best.x.assign(n, 0.0);
    best.objective = naive_objective(prob, best.x);

    const Eigen::MatrixXd P = to_eigen(prob.P);
    const Eigen::VectorXd d =
        Eigen::Map<const Eigen::VectorXd>(prob.d.data(), static_cast<Eigen::Index>(n));

    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
        std::vector<Eigen::Index> free;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::size_t{1} << i)) free.push_back(static_cast<Eigen::Index>(i));
        const Eigen::Index k = static_cast<Eigen::Index>(free.size());

        Eigen::MatrixXd Pff(k, k);
        Eigen::VectorXd df(k);
        for (Eigen::Index a = 0; a < k; ++a) {
            df(a) = d(free[a]);
            for (Eigen::Index b = 0; b < k; ++b) Pff(a, b) = P(free[a], free[b]);
        }

        const Eigen::VectorXd z = Eigen::FullPivLU<Eigen::MatrixXd>(Pff).solve(-df);
        if ((Pff * z + df).lpNorm<Eigen::Infinity>() > 1e-8 * (1.0 + df.lpNorm<Eigen::Infinity>()))
            continue;  // singular block, no stationary point on this face
        if ((z.array() < -1e-12).any()) continue;

        Vector x(n, 0.0);
        for (Eigen::Index a = 0; a < k; ++a) x[static_cast<std::size_t>(free[a])] = std::max(0.0, z(a));
        const double f = naive_objective(prob, x);
        if (f < best.objective) best = {std::move(x), f};
    }
    return best;
}

// Plain projected gradient with an Eigen-computed exact step, run to the
// spec KKT residual; the reference path for the accelerated solver.
inline Vector projected_gradient_minimum(const NqpProblem& prob, const Vector& x0, double eps,
                                         std::size_t max_iters) {
    const std::size_t n = prob.size();
    const Eigen::MatrixXd P = to_eigen(prob.P);
    const double lmax = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(P).eigenvalues().maxCoeff();
    const double step = 1.0 / lmax;

    Vector x = x0;
    for (std::size_t k = 0; k < max_iters; ++k) {
        const Vector g = naive_gradient(prob, x);
        double res = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double v = (x[i] == 0.0) ? std::min(0.0, g[i]) : g[i];
            res += v * v;
        }
        if (std::sqrt(res) <= eps) break;
        for (std::size_t i = 0; i < n; ++i) x[i] = std::max(0.0, x[i] - step * g[i]);
    }
    return x;
}

// Central finite difference of the objective along u.
inline double directional_derivative(const NqpProblem& prob, const Vector& x, const Vector& u,
                                     double h) {
    Vector xp = x;
    Vector xm = x;
    for (std::size_t i = 0; i < x.size(); ++i) {
        xp[i] += h * u[i];
        xm[i] -= h * u[i];
    }
    return (naive_objective(prob, xp) - naive_objective(prob, xm)) / (2.0 * h);
}

}  // namespace oracles
