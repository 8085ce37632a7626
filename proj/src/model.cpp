#include "nqpcd/model.hpp"

#include <cmath>

namespace nqpcd {

namespace {

ValidationReport fail(std::string msg) { return {false, std::move(msg)}; }

std::string at1(std::size_t i) { return std::to_string(i + 1); }

std::string at2(std::size_t i, std::size_t j) {
    return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

ValidationReport check_finite(const DenseMatrix& m, const std::string& name) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!std::isfinite(m(i, j)))
                return fail(name + ": non-finite entry at " + at2(i, j));
    return {};
}

ValidationReport check_finite(const Vector& v, const std::string& name) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!std::isfinite(v[i]))
            return fail(name + ": non-finite entry at " + at1(i));
    return {};
}

ValidationReport check_symmetric(const DenseMatrix& m, const std::string& name) {
    if (m.rows() != m.cols())
        return fail(name + ": not square (" + std::to_string(m.rows()) + "x" +
                    std::to_string(m.cols()) + ")");
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i + 1; j < m.cols(); ++j)
            if (std::abs(m(i, j) - m(j, i)) > kSymmetryTol)
                return fail(name + ": asymmetry at " + at2(i, j));
    return {};
}

}  // namespace

ValidationReport validate(const DenseMatrix& m) {
    if (m.rows() < 1 || m.cols() < 1) return fail("matrix: empty");
    return check_finite(m, "matrix");
}

ValidationReport validate(const Vector& v) {
    return check_finite(v, "vector");
}

ValidationReport validate(const NqpProblem& prob) {
    if (auto r = check_finite(prob.P, "P"); !r.ok) return r;
    if (auto r = check_finite(prob.d, "d"); !r.ok) return r;
    if (auto r = check_symmetric(prob.P, "P"); !r.ok) return r;
    if (prob.d.size() != prob.P.rows())
        return fail("d: length " + std::to_string(prob.d.size()) + " does not match P");
    for (std::size_t i = 0; i < prob.P.rows(); ++i)
        if (!(prob.P(i, i) > 0.0))
            return fail("P: nonpositive diagonal at " + at1(i));
    return {};
}

ValidationReport validate(const LinNqpProblem& prob) {
    if (auto r = check_finite(prob.Q, "Q"); !r.ok) return r;
    if (auto r = check_finite(prob.c, "c"); !r.ok) return r;
    if (auto r = check_finite(prob.A, "A"); !r.ok) return r;
    if (auto r = check_finite(prob.b, "b"); !r.ok) return r;
    if (auto r = check_symmetric(prob.Q, "Q"); !r.ok) return r;
    const std::size_t n = prob.Q.rows();
    if (prob.c.size() != n) return fail("c: length does not match Q");
    if (prob.A.cols() != n) return fail("A: column count does not match Q");
    if (prob.b.size() != prob.A.rows()) return fail("b: length does not match A");
    // Each variable needs curvature from Q or coverage by a constraint column,
    // otherwise the penalized subproblems have a zero diagonal.
    for (std::size_t i = 0; i < n; ++i) {
        if (prob.Q(i, i) > 0.0) continue;
        bool covered = false;
        for (std::size_t k = 0; k < prob.A.rows() && !covered; ++k)
            covered = prob.A(k, i) != 0.0;
        if (!covered)
            return fail("Q: zero diagonal at " + at1(i) + " with zero constraint column");
    }
    return {};
}

ValidationReport validate(const NmfProblem& prob) {
    if (auto r = check_finite(prob.M, "M"); !r.ok) return r;
    for (std::size_t i = 0; i < prob.M.rows(); ++i)
        for (std::size_t j = 0; j < prob.M.cols(); ++j)
            if (prob.M(i, j) < 0.0)
                return fail("M: negative entry at " + at2(i, j));
    const std::size_t cap = std::min(prob.M.rows(), prob.M.cols());
    if (prob.r < 1 || prob.r > cap)
        return fail("r: " + std::to_string(prob.r) + " outside [1," + std::to_string(cap) + "]");
    return {};
}

double nqp_objective(const NqpProblem& prob, const Vector& x) {
    if (x.size() != prob.size()) throw std::invalid_argument("nqp_objective: dimension mismatch");
    double acc = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
        acc += x[i] * (0.5 * dot(prob.P.row(i), x) + prob.d[i]);
    return acc;
}

Vector nqp_gradient(const NqpProblem& prob, const Vector& x) {
    if (x.size() != prob.size()) throw std::invalid_argument("nqp_gradient: dimension mismatch");
    Vector g = matvec(prob.P, x);
    for (std::size_t i = 0; i < g.size(); ++i) g[i] += prob.d[i];
    return g;
}

}  // namespace nqpcd
