#pragma once

#include <vector>

#include "cauchy3d/error.hpp"

namespace cauchy3d {

/// Dense row-major matrix of doubles.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols, double value = 0.0);

    static Matrix identity(int n);

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }

    double& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    double operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

    double max_abs() const;

    std::vector<double> multiply(const std::vector<double>& x) const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> data_;
};

/// Combined LU factors with a row permutation: row i of `lu` holds row perm[i]
/// of the input, L is unit lower triangular, U upper triangular.
struct LuFactorization {
    Matrix lu;
    std::vector<int> perm;
    int sign = 1;

    int size() const noexcept { return lu.rows(); }
};

/// A pivot below this fraction of max|A| is treated as zero.
inline constexpr double kPivotRelThreshold = 1e-12;

/// Partial-pivoting LU. Throws Singular when the largest available pivot
/// falls below kPivotRelThreshold * max|A|.
LuFactorization lu_factor(const Matrix& a);

/// Solves A x = b from a factorization of A.
std::vector<double> lu_solve(const LuFactorization& f, const std::vector<double>& b);

/// True iff |a_ii| > sum_{j != i} |a_ij| for every row.
bool is_strictly_row_dominant(const Matrix& a);

} // namespace cauchy3d
