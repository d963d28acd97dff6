#include "fracbem/linalg.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace fracbem {

DenseMatrix DenseMatrix::identity(int n) {
    DenseMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m(i, i) = 1.0;
    return m;
}

DenseMatrix DenseMatrix::transposed() const {
    DenseMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

std::vector<double> DenseMatrix::apply(const std::vector<double>& v) const {
    if (static_cast<int>(v.size()) != cols_)
        throw std::invalid_argument("DenseMatrix::apply: dimension mismatch");
    std::vector<double> out(rows_, 0.0);
    for (int i = 0; i < rows_; ++i) {
        double s = 0.0;
        const double* row = a_.data() + static_cast<std::size_t>(i) * cols_;
        for (int j = 0; j < cols_; ++j)
            s += row[j] * v[j];
        out[i] = s;
    }
    return out;
}

DenseMatrix DenseMatrix::multiply(const DenseMatrix& rhs) const {
    if (cols_ != rhs.rows_)
        throw std::invalid_argument("DenseMatrix::multiply: dimension mismatch");
    DenseMatrix out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const double aik = (*this)(i, k);
            if (aik == 0.0)
                continue;
            for (int j = 0; j < rhs.cols_; ++j)
                out(i, j) += aik * rhs(k, j);
        }
    return out;
}

double DenseMatrix::max_abs() const {
    double m = 0.0;
    for (double v : a_)
        m = std::max(m, std::abs(v));
    return m;
}

LUFactorization::LUFactorization(DenseMatrix a) : lu_(std::move(a)) {
    if (lu_.rows() != lu_.cols())
        throw std::invalid_argument("lu_factor: matrix must be square");
    const int n = lu_.rows();
    pivots_.resize(n);

    for (int k = 0; k < n; ++k) {
        int p = k;
        double best = std::abs(lu_(k, k));
        for (int i = k + 1; i < n; ++i) {
            const double v = std::abs(lu_(i, k));
            if (v > best) {
                best = v;
                p = i;
            }
        }
        if (best == 0.0)
            throw singular_matrix_error("lu_factor: singular pivot at column " +
                                        std::to_string(k));
        pivots_[k] = p;
        if (p != k)
            for (int j = 0; j < n; ++j)
                std::swap(lu_(k, j), lu_(p, j));
        const double inv_pivot = 1.0 / lu_(k, k);
        for (int i = k + 1; i < n; ++i) {
            const double m = lu_(i, k) * inv_pivot;
            lu_(i, k) = m;
            if (m == 0.0)
                continue;
            for (int j = k + 1; j < n; ++j)
                lu_(i, j) -= m * lu_(k, j);
        }
    }
}

std::vector<double> LUFactorization::solve(std::vector<double> rhs) const {
    const int n = size();
    if (static_cast<int>(rhs.size()) != n)
        throw std::invalid_argument("lu_solve: dimension mismatch");
    for (int k = 0; k < n; ++k) {
        if (pivots_[k] != k)
            std::swap(rhs[k], rhs[pivots_[k]]);
        for (int i = k + 1; i < n; ++i)
            rhs[i] -= lu_(i, k) * rhs[k];
    }
    for (int i = n - 1; i >= 0; --i) {
        double s = rhs[i];
        for (int j = i + 1; j < n; ++j)
            s -= lu_(i, j) * rhs[j];
        rhs[i] = s / lu_(i, i);
    }
    return rhs;
}

DenseMatrix LUFactorization::solve(const DenseMatrix& rhs) const {
    if (rhs.rows() != size())
        throw std::invalid_argument("lu_solve: dimension mismatch");
    DenseMatrix x(rhs.rows(), rhs.cols());
    std::vector<double> col(rhs.rows());
    for (int j = 0; j < rhs.cols(); ++j) {
        for (int i = 0; i < rhs.rows(); ++i)
            col[i] = rhs(i, j);
        col = solve(std::move(col));
        for (int i = 0; i < rhs.rows(); ++i)
            x(i, j) = col[i];
    }
    return x;
}

DenseMatrix invert(const DenseMatrix& a) {
    return LUFactorization(a).solve(DenseMatrix::identity(a.rows()));
}

} // namespace fracbem
