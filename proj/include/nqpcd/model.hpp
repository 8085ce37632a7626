#pragma once

#include <cstddef>
#include <string>

#include "nqpcd/dense.hpp"

namespace nqpcd {

/// min_{x >= 0} 1/2 x'Px + d'x with P symmetric PSD, P_ii > 0.
struct NqpProblem {
    DenseMatrix P;
    Vector d;

    std::size_t size() const { return d.size(); }
};

/// min_{x >= 0} 1/2 x'Qx + c'x subject to Ax = b.
struct LinNqpProblem {
    DenseMatrix Q;
    Vector c;
    DenseMatrix A;
    Vector b;

    std::size_t size() const { return c.size(); }
    std::size_t constraints() const { return b.size(); }
};

/// M ~ X Y' with X, Y >= 0; M is m x n nonnegative, r the target rank.
struct NmfProblem {
    DenseMatrix M;
    std::size_t r = 0;
};

/// Outcome of an invariant check. `message` names the first violated
/// invariant with a 1-based index, empty when ok.
struct ValidationReport {
    bool ok = true;
    std::string message;
};

constexpr double kSymmetryTol = 1e-10;

ValidationReport validate(const DenseMatrix& m);
ValidationReport validate(const Vector& v);
ValidationReport validate(const NqpProblem& prob);
ValidationReport validate(const LinNqpProblem& prob);
ValidationReport validate(const NmfProblem& prob);

/// F(x) = 1/2 x'Px + d'x. Defined for any real x.
double nqp_objective(const NqpProblem& prob, const Vector& x);

/// grad F(x) = Px + d.
Vector nqp_gradient(const NqpProblem& prob, const Vector& x);

}  // namespace nqpcd
