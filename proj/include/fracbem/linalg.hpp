#pragma once

#include <stdexcept>
#include <vector>

namespace fracbem {

struct singular_matrix_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Dense row-major real matrix.
class DenseMatrix {
  public:
    DenseMatrix() = default;
    DenseMatrix(int rows, int cols, double fill = 0.0)
        : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, fill) {}

    static DenseMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    const std::vector<double>& data() const { return a_; }

    DenseMatrix transposed() const;

    /// this * v
    std::vector<double> apply(const std::vector<double>& v) const;
    /// this * B
    DenseMatrix multiply(const DenseMatrix& rhs) const;

    double max_abs() const;

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> a_;
};

/// LU factorization with partial pivoting (P A = L U), packed in place.
class LUFactorization {
  public:
    explicit LUFactorization(DenseMatrix a);

    int size() const { return lu_.rows(); }
    const std::vector<int>& pivots() const { return pivots_; }

    std::vector<double> solve(std::vector<double> rhs) const;
    /// Columnwise solve: returns X with A X = B.
    DenseMatrix solve(const DenseMatrix& rhs) const;

  private:
    DenseMatrix lu_;
    std::vector<int> pivots_;
};

inline LUFactorization lu_factor(DenseMatrix a) { return LUFactorization(std::move(a)); }

inline std::vector<double> lu_solve(const LUFactorization& f, std::vector<double> rhs) {
    return f.solve(std::move(rhs));
}

DenseMatrix invert(const DenseMatrix& a);

} // namespace fracbem
