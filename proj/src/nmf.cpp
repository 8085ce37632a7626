#include "nqpcd/nmf.hpp"

#include <cmath>
#include <stdexcept>

#include "nqpcd/gcd.hpp"

namespace nqpcd::nmf {

namespace {

double column_norm(const DenseMatrix& A, std::size_t j) {
    double s = 0.0;
    for (std::size_t i = 0; i < A.rows(); ++i) s += A(i, j) * A(i, j);
    return std::sqrt(s);
}

void scale_column(DenseMatrix& A, std::size_t j, double s) {
    for (std::size_t i = 0; i < A.rows(); ++i) A(i, j) *= s;
}

/// 1/2 ||X Y' - M||_F^2 without materializing the product.
double half_residual_fro2(const DenseMatrix& M, const DenseMatrix& X, const DenseMatrix& Y) {
    double acc = 0.0;
    for (std::size_t i = 0; i < M.rows(); ++i) {
        const auto xi = X.row(i);
        for (std::size_t j = 0; j < M.cols(); ++j) {
            const double r = dot(xi, Y.row(j)) - M(i, j);
            acc += r * r;
        }
    }
    return 0.5 * acc;
}

DenseMatrix product(const DenseMatrix& X, const DenseMatrix& Y) {
    DenseMatrix P(X.rows(), Y.rows());
    for (std::size_t i = 0; i < X.rows(); ++i)
        for (std::size_t j = 0; j < Y.rows(); ++j) P(i, j) = dot(X.row(i), Y.row(j));
    return P;
}

DenseMatrix random_factor(std::size_t rows, std::size_t cols, SplitMix64& rng) {
    DenseMatrix F(rows, cols);
    double* p = F.data();
    for (std::size_t k = 0; k < rows * cols; ++k) p[k] = rng.next_uniform();
    return F;
}

// Solves every row of `factor` against the fixed-side subproblems.
void solve_rows(DenseMatrix& factor, const RowSubproblems& subs, double eps_k,
                std::uint64_t inner_budget, std::uint64_t& update_count) {
    const std::size_t r = factor.cols();
    NqpProblem sub{subs.P, Vector(r)};
    Vector row(r);
    for (std::size_t i = 0; i < factor.rows(); ++i) {
        for (std::size_t j = 0; j < r; ++j) {
            sub.d[j] = subs.D(j, i);
            row[j] = factor(i, j);
        }
        const SolveReport rep = greedy_solve(sub, row, {eps_k, inner_budget, 0});
        update_count += rep.updates;
        for (std::size_t j = 0; j < r; ++j) factor(i, j) = rep.x[j];
    }
}

struct RescaleCheck {
    double norm_mismatch = 0.0;
    double product_drift = 0.0;
};

// Instrumented rescale used when check_rescale is set.
RescaleCheck checked_rescale(DenseMatrix& X, DenseMatrix& Y, double floor) {
    const std::size_t r = X.cols();
    std::vector<bool> eligible(r);
    for (std::size_t j = 0; j < r; ++j)
        eligible[j] = column_norm(X, j) >= floor && column_norm(Y, j) >= floor;
    const DenseMatrix before = product(X, Y);

    rescale_pair(X, Y, floor);

    RescaleCheck check;
    for (std::size_t j = 0; j < r; ++j) {
        if (!eligible[j]) continue;
        const double nx = column_norm(X, j);
        const double ny = column_norm(Y, j);
        check.norm_mismatch = std::max(check.norm_mismatch, std::abs(nx - ny) / (1.0 + nx));
    }
    const DenseMatrix after = product(X, Y);
    double diff = 0.0;
    for (std::size_t k = 0; k < before.rows() * before.cols(); ++k) {
        const double d = after.data()[k] - before.data()[k];
        diff += d * d;
    }
    check.product_drift = std::sqrt(diff) / (1.0 + frobenius_norm(before));
    return check;
}

}  // namespace

void rescale_pair(DenseMatrix& X, DenseMatrix& Y, double floor) {
    if (X.cols() != Y.cols()) throw std::invalid_argument("rescale_pair: rank mismatch");
    for (std::size_t j = 0; j < X.cols(); ++j) {
        const double nx = column_norm(X, j);
        const double ny = column_norm(Y, j);
        if (nx < floor || ny < floor) continue;
        const double s = std::sqrt(ny / nx);
        scale_column(X, j, s);
        scale_column(Y, j, 1.0 / s);
    }
}

RowSubproblems build_row_subproblems(DenseMatrix& F, const DenseMatrix& M_block,
                                     double reseed_floor, SplitMix64& rng) {
    if (M_block.rows() != F.rows())
        throw std::invalid_argument("build_row_subproblems: row count of M_block must match F");
    const std::size_t q = F.rows();
    const std::size_t r = F.cols();
    const std::size_t p = M_block.cols();

    for (std::size_t j = 0; j < r; ++j) {
        double n = column_norm(F, j);
        while (n * n < reseed_floor) {
            for (std::size_t k = 0; k < q; ++k) F(k, j) = rng.next_uniform() * 1e-3;
            n = column_norm(F, j);
        }
    }

    RowSubproblems subs{gram(F), DenseMatrix(r, p)};
    for (std::size_t j = 0; j < r; ++j) {
        for (std::size_t i = 0; i < p; ++i) {
            double s = 0.0;
            for (std::size_t k = 0; k < q; ++k) s += F(k, j) * M_block(k, i);
            subs.D(j, i) = -s;
        }
    }
    return subs;
}

NmfReport altmin_solve(const NmfProblem& prob, const NmfOptions& opts,
                       const std::optional<std::pair<DenseMatrix, DenseMatrix>>& init) {
    if (auto r = validate(prob); !r.ok) throw std::invalid_argument("altmin_solve: " + r.message);
    if (!(opts.fit_tol > 0.0) || !(opts.eps_k.value > 0.0) || opts.max_outer < 1)
        throw std::invalid_argument("altmin_solve: invalid options");
    const std::size_t m = prob.M.rows();
    const std::size_t n = prob.M.cols();
    const std::size_t r = prob.r;

    Stopwatch clock;
    SplitMix64 rng(opts.rng_seed);
    NmfReport rep;
    if (init) {
        if (init->first.rows() != m || init->first.cols() != r || init->second.rows() != n ||
            init->second.cols() != r)
            throw std::invalid_argument("altmin_solve: init factor shapes do not match");
        for (std::size_t k = 0; k < m * r; ++k)
            if (init->first.data()[k] < 0.0)
                throw std::invalid_argument("altmin_solve: X0 must be nonnegative");
        for (std::size_t k = 0; k < n * r; ++k)
            if (init->second.data()[k] < 0.0)
                throw std::invalid_argument("altmin_solve: Y0 must be nonnegative");
        rep.X = init->first;
        rep.Y = init->second;
    } else {
        rep.X = random_factor(m, r, rng);
        rep.Y = random_factor(n, r, rng);
    }

    const DenseMatrix Mt = transposed(prob.M);
    const double norm_m = frobenius_norm(prob.M);
    rep.fit_is_absolute = norm_m == 0.0;
    auto fit_of = [&](double objective) {
        const double res = std::sqrt(2.0 * objective);
        return rep.fit_is_absolute ? res : res / norm_m;
    };
    auto do_rescale = [&] {
        if (!opts.rescale) return;
        if (opts.check_rescale) {
            const RescaleCheck check = checked_rescale(rep.X, rep.Y, opts.rescale_floor);
            rep.max_rescale_norm_mismatch =
                std::max(rep.max_rescale_norm_mismatch, check.norm_mismatch);
            rep.max_rescale_product_drift =
                std::max(rep.max_rescale_product_drift, check.product_drift);
        } else {
            rescale_pair(rep.X, rep.Y, opts.rescale_floor);
        }
    };

    rep.objective = half_residual_fro2(prob.M, rep.X, rep.Y);
    rep.fit = fit_of(rep.objective);
    rep.trace.push_back({0.0, 0, clock.seconds(), rep.objective, rep.fit});
    if (rep.fit <= opts.fit_tol) {
        rep.converged = true;
        return rep;
    }

    for (std::size_t outer = 0; outer < opts.max_outer; ++outer) {
        const double eps_k = opts.eps_k.at(outer);

        do_rescale();
        const RowSubproblems x_subs = build_row_subproblems(rep.Y, Mt, opts.reseed_floor, rng);
        solve_rows(rep.X, x_subs, eps_k, opts.inner_max_updates, rep.inner_updates);
        rep.half_step_objectives.push_back(half_residual_fro2(prob.M, rep.X, rep.Y));

        do_rescale();
        const RowSubproblems y_subs = build_row_subproblems(rep.X, prob.M, opts.reseed_floor, rng);
        solve_rows(rep.Y, y_subs, eps_k, opts.inner_max_updates, rep.inner_updates);
        rep.half_step_objectives.push_back(half_residual_fro2(prob.M, rep.X, rep.Y));

        rep.objective = rep.half_step_objectives.back();
        rep.fit = fit_of(rep.objective);
        rep.outer_iterations = outer + 1;
        rep.trace.push_back({static_cast<double>(outer + 1), rep.inner_updates, clock.seconds(),
                             rep.objective, rep.fit});
        if (rep.fit <= opts.fit_tol) {
            rep.converged = true;
            break;
        }
    }
    return rep;
}

}  // namespace nqpcd::nmf
