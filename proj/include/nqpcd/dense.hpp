#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

namespace nqpcd {

/// Dense vector of doubles. Plain std::vector; helpers below.
using Vector = std::vector<double>;

/// Dense row-major matrix of doubles.
class DenseMatrix {
public:
    DenseMatrix() = default;

    DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {
        if (rows == 0 || cols == 0) {
            throw std::invalid_argument("DenseMatrix: rows and cols must be >= 1");
        }
    }

    /// Row-major entries, one initializer list per row.
    DenseMatrix(std::initializer_list<std::initializer_list<double>> rows) {
        rows_ = rows.size();
        if (rows_ == 0) throw std::invalid_argument("DenseMatrix: rows must be >= 1");
        cols_ = rows.begin()->size();
        if (cols_ == 0) throw std::invalid_argument("DenseMatrix: cols must be >= 1");
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw std::invalid_argument("DenseMatrix: ragged initializer");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

    std::span<const double> row(std::size_t i) const {
        return {data_.data() + i * cols_, cols_};
    }
    std::span<double> row(std::size_t i) {
        return {data_.data() + i * cols_, cols_};
    }

    const double* data() const { return data_.data(); }
    double* data() { return data_.data(); }

    bool operator==(const DenseMatrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

inline double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm2(std::span<const double> v);

/// y = A x, plain row-by-row accumulation.
Vector matvec(const DenseMatrix& A, const Vector& x);

/// y = A^T x.
Vector matvec_transposed(const DenseMatrix& A, const Vector& x);

DenseMatrix transposed(const DenseMatrix& A);

/// A^T A, computed on the upper triangle and mirrored, so the result is
/// exactly symmetric.
DenseMatrix gram(const DenseMatrix& A);

double frobenius_norm(const DenseMatrix& A);

}  // namespace nqpcd
