#include "nqpcd/dense.hpp"

#include <cmath>

namespace nqpcd {

double norm2(std::span<const double> v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

Vector matvec(const DenseMatrix& A, const Vector& x) {
    if (x.size() != A.cols()) throw std::invalid_argument("matvec: dimension mismatch");
    Vector y(A.rows());
    for (std::size_t i = 0; i < A.rows(); ++i) y[i] = dot(A.row(i), x);
    return y;
}

Vector matvec_transposed(const DenseMatrix& A, const Vector& x) {
    if (x.size() != A.rows()) throw std::invalid_argument("matvec_transposed: dimension mismatch");
    Vector y(A.cols(), 0.0);
    for (std::size_t i = 0; i < A.rows(); ++i) {
        const auto ri = A.row(i);
        for (std::size_t j = 0; j < A.cols(); ++j) y[j] += ri[j] * x[i];
    }
    return y;
}

DenseMatrix transposed(const DenseMatrix& A) {
    DenseMatrix T(A.cols(), A.rows());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) T(j, i) = A(i, j);
    return T;
}

DenseMatrix gram(const DenseMatrix& A) {
    const std::size_t n = A.cols();
    DenseMatrix G(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < A.rows(); ++k) s += A(k, i) * A(k, j);
            G(i, j) = s;
            G(j, i) = s;
        }
    }
    return G;
}

double frobenius_norm(const DenseMatrix& A) {
    double s = 0.0;
    const double* p = A.data();
    for (std::size_t k = 0; k < A.rows() * A.cols(); ++k) s += p[k] * p[k];
    return std::sqrt(s);
}

}  // namespace nqpcd
