#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "latscat/core.hpp"

namespace latscat {

/// Row-major dense complex matrix.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<Complex> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const Complex> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    static ComplexMatrix identity(std::size_t n);

    /// max_i sum_j |a_ij|
    double norm_inf() const;

    std::vector<Complex> multiply(std::span<const Complex> x) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

/// Pivots smaller than this fraction of their row scale are treated as zero.
inline constexpr double kPivotTolerance = 1e-14;

/// LU factorisation with scaled partial pivoting. Throws SingularSystem when
/// a pivot falls below kPivotTolerance times the original scale of its row.
class LuFactorization {
public:
    explicit LuFactorization(ComplexMatrix a);

    std::size_t size() const { return lu_.rows(); }
    std::vector<Complex> solve(std::span<const Complex> rhs) const;

    /// ||A||_inf * ||A^-1||_inf, with the inverse built column by column.
    double condition_inf() const;

private:
    ComplexMatrix lu_;
    std::vector<std::size_t> perm_;
    double norm_a_ = 0.0;
};

std::vector<Complex> solve_complex_linear(const ComplexMatrix& a, std::span<const Complex> rhs);

double max_abs(std::span<const Complex> v);

}  // namespace latscat
