#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace latnmf {

/// Row-major dense real matrix. Every entry is finite.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0);
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> values);
  DenseMatrix(std::initializer_list<std::initializer_list<double>> rows);

  static DenseMatrix identity(std::size_t n);
  static DenseMatrix from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return values_.empty(); }

  double operator()(std::size_t i, std::size_t j) const { return values_[i * cols_ + j]; }
  double& operator()(std::size_t i, std::size_t j) { return values_[i * cols_ + j]; }

  std::span<const double> row(std::size_t i) const {
    return {values_.data() + i * cols_, cols_};
  }
  std::span<double> row(std::size_t i) { return {values_.data() + i * cols_, cols_}; }

  std::vector<double> column(std::size_t j) const;
  std::span<const double> values() const noexcept { return values_; }

  DenseMatrix transpose() const;
  /// Rows `indices` of this matrix, in the given order.
  DenseMatrix select_rows(std::span<const std::size_t> indices) const;
  /// Columns `indices` of this matrix, in the given order.
  DenseMatrix select_cols(std::span<const std::size_t> indices) const;
  /// This matrix with `other`'s rows appended below.
  DenseMatrix stack(const DenseMatrix& other) const;

  /// Largest absolute entry, 0 for an empty matrix.
  double max_abs() const noexcept;
  double min_entry() const noexcept;

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> values_;
};

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator*(double c, const DenseMatrix& a);

/// Max-norm of `a - b`. Shapes must agree.
double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b);

// Rank decisions use a pivot threshold relative to the largest entry, so they
// are unchanged when the matrix is scaled by a positive constant.

/// Numerical rank: pivots of magnitude > tol_rank * max|M| (or tol_rank when
/// M is zero) under row reduction with partial pivoting.
std::size_t rank_of(const DenseMatrix& m, double tol_rank);

/// Same as rank_of with an absolute pivot threshold.
std::size_t rank_with_threshold(const DenseMatrix& m, double threshold);

/// Solves L·X = B for square nonsingular L by LU with partial pivoting.
/// Throws FactorizationError(SingularBasis) when a pivot falls below
/// tol_rank * max|L|.
DenseMatrix solve(const DenseMatrix& l, const DenseMatrix& b, double tol_rank);

/// Scans rows top to bottom and keeps a row iff it raises the rank of the
/// rows kept so far. Returns the kept row indices in scan order.
/// Throws FactorizationError(ZeroMatrix) for an all-zero matrix.
std::vector<std::size_t> greedy_independent_rows(const DenseMatrix& m, double tol_rank);

}  // namespace latnmf
