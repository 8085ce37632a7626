#include "nqpcd/instances.hpp"

#include <cmath>
#include <stdexcept>

#include "nqpcd/rng.hpp"

namespace nqpcd {

namespace {

DenseMatrix normal_matrix(std::size_t rows, std::size_t cols, SplitMix64& rng) {
    DenseMatrix G(rows, cols);
    double* p = G.data();
    for (std::size_t k = 0; k < rows * cols; ++k) p[k] = rng.next_normal();
    return G;
}

Vector normal_vector(std::size_t n, SplitMix64& rng) {
    Vector v(n);
    for (auto& e : v) e = rng.next_normal();
    return v;
}

}  // namespace

NqpProblem gen_random_psd_nqp(std::size_t n, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("gen_random_psd_nqp: n must be >= 2");
    SplitMix64 rng(seed);
    DenseMatrix P;
    for (;;) {
        P = gram(normal_matrix(n, n, rng));
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) ok = P(i, i) > 1e-8;
        if (ok) break;
    }
    return {std::move(P), normal_vector(n, rng)};
}

NqpProblem gen_hard_nqp(std::size_t n) {
    if (n < 2) throw std::invalid_argument("gen_hard_nqp: n must be >= 2");
    DenseMatrix P(n, n, 0.9);
    for (std::size_t i = 0; i < n; ++i) P(i, i) = 1.0;
    return {std::move(P), Vector(n, -10.0)};
}

LinNqpProblem gen_lin_nqp(std::size_t m, std::size_t n, std::uint64_t seed) {
    if (m < 1 || m >= n) throw std::invalid_argument("gen_lin_nqp: need 1 <= m < n");
    SplitMix64 rng(seed);
    DenseMatrix Q = gram(normal_matrix(n, n, rng));
    Vector c = normal_vector(n, rng);
    DenseMatrix A = normal_matrix(m, n, rng);
    Vector x_feas = normal_vector(n, rng);
    for (auto& e : x_feas) e = std::abs(e);
    Vector b = matvec(A, x_feas);
    return {std::move(Q), std::move(c), std::move(A), std::move(b)};
}

SyntheticNmf gen_synthetic_nmf(std::size_t m, std::size_t n, std::size_t r, std::uint64_t seed) {
    if (r < 1 || r > std::min(m, n))
        throw std::invalid_argument("gen_synthetic_nmf: need 1 <= r <= min(m, n)");
    SplitMix64 rng(seed);
    DenseMatrix L = normal_matrix(m, r, rng);
    DenseMatrix R = normal_matrix(n, r, rng);
    for (std::size_t k = 0; k < m * r; ++k) L.data()[k] = std::max(0.0, L.data()[k]);
    for (std::size_t k = 0; k < n * r; ++k) R.data()[k] = std::max(0.0, R.data()[k]);

    DenseMatrix M(m, n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) M(i, j) = dot(L.row(i), R.row(j));
    return {{std::move(M), r}, std::move(L), std::move(R)};
}

}  // namespace nqpcd
