#include "latscat/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace latscat {

ComplexMatrix ComplexMatrix::identity(std::size_t n)
{
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1.0;
    return m;
}

double ComplexMatrix::norm_inf() const
{
    double best = 0.0;
    for (std::size_t r = 0; r < rows_; ++r) {
        double s = 0.0;
        for (const auto& v : row(r))
            s += std::abs(v);
        best = std::max(best, s);
    }
    return best;
}

std::vector<Complex> ComplexMatrix::multiply(std::span<const Complex> x) const
{
    if (x.size() != cols_)
        throw InvalidArgument("matrix-vector size mismatch");
    std::vector<Complex> y(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        Complex s{};
        for (std::size_t c = 0; c < cols_; ++c)
            s += (*this)(r, c) * x[c];
        y[r] = s;
    }
    return y;
}

double max_abs(std::span<const Complex> v)
{
    double m = 0.0;
    for (const auto& z : v)
        m = std::max(m, std::abs(z));
    return m;
}

LuFactorization::LuFactorization(ComplexMatrix a) : lu_(std::move(a))
{
    const std::size_t n = lu_.rows();
    if (n == 0 || lu_.cols() != n)
        throw InvalidArgument("LU factorisation needs a non-empty square matrix");
    norm_a_ = lu_.norm_inf();

    std::vector<double> scale(n);
    for (std::size_t r = 0; r < n; ++r) {
        double s = 0.0;
        for (const auto& v : lu_.row(r))
            s = std::max(s, std::abs(v));
        if (s == 0.0) {
            std::ostringstream msg;
            msg << "matching matrix has an all-zero row " << r;
            throw SingularSystem(msg.str());
        }
        scale[r] = s;
    }

    perm_.resize(n);
    std::iota(perm_.begin(), perm_.end(), std::size_t{0});

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        double best = -1.0;
        for (std::size_t r = k; r < n; ++r) {
            const double rel = std::abs(lu_(r, k)) / scale[perm_[r]];
            if (rel > best) {
                best = rel;
                p = r;
            }
        }
        if (best < kPivotTolerance) {
            std::ostringstream msg;
            msg << "matching matrix numerically singular at column " << k
                << " (relative pivot " << best << ")";
            throw SingularSystem(msg.str());
        }
        if (p != k) {
            std::swap_ranges(lu_.row(k).begin(), lu_.row(k).end(), lu_.row(p).begin());
            std::swap(perm_[k], perm_[p]);
        }
        const Complex pivot = lu_(k, k);
        for (std::size_t r = k + 1; r < n; ++r) {
            const Complex f = lu_(r, k) / pivot;
            lu_(r, k) = f;
            if (f == Complex{})
                continue;
            for (std::size_t c = k + 1; c < n; ++c)
                lu_(r, c) -= f * lu_(k, c);
        }
    }
}

std::vector<Complex> LuFactorization::solve(std::span<const Complex> rhs) const
{
    const std::size_t n = size();
    if (rhs.size() != n)
        throw InvalidArgument("right-hand side size mismatch");

    std::vector<Complex> x(n);
    for (std::size_t i = 0; i < n; ++i) {
        Complex s = rhs[perm_[i]];
        for (std::size_t j = 0; j < i; ++j)
            s -= lu_(i, j) * x[j];
        x[i] = s;
    }
    for (std::size_t i = n; i-- > 0;) {
        Complex s = x[i];
        for (std::size_t j = i + 1; j < n; ++j)
            s -= lu_(i, j) * x[j];
        x[i] = s / lu_(i, i);
    }
    return x;
}

double LuFactorization::condition_inf() const
{
    const std::size_t n = size();
    std::vector<double> row_sums(n, 0.0);
    std::vector<Complex> e(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::fill(e.begin(), e.end(), Complex{});
        e[c] = 1.0;
        const auto col = solve(e);
        for (std::size_t r = 0; r < n; ++r)
            row_sums[r] += std::abs(col[r]);
    }
    return norm_a_ * *std::max_element(row_sums.begin(), row_sums.end());
}

std::vector<Complex> solve_complex_linear(const ComplexMatrix& a, std::span<const Complex> rhs)
{
    return LuFactorization(a).solve(rhs);
}

}  // namespace latscat
