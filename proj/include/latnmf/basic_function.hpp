#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "latnmf/matrix.hpp"

namespace latnmf {

/// A maximal set of linearly independent rows of A.
struct BasicSet {
  std::vector<std::size_t> row_indices;  // into A, scan order
  DenseMatrix rows;                      // r x m, the selected rows

  std::size_t rank() const noexcept { return row_indices.size(); }
};

BasicSet select_basic_set(const DenseMatrix& a, double tol_rank);

/// Values of the basic function on every column, plus the column sums of X.
struct BasicFunctionTable {
  DenseMatrix points;        // m x r; row i is beta(i), a point of the unit simplex
  std::vector<double> sums;  // y(i) = sum of column i of X, all > 0

  std::size_t size() const noexcept { return points.rows(); }
  std::size_t dimension() const noexcept { return points.cols(); }
  std::span<const double> point(std::size_t i) const { return points.row(i); }
};

/// beta(i) = X(:, i) / sum(X(:, i)). Requires X >= 0 with no zero column.
BasicFunctionTable basic_function(const DenseMatrix& x);

/// The range of the basic function with near-equal values merged.
struct DistinctRange {
  DenseMatrix unique_points;                  // mu x r, ordered by representative column
  std::vector<std::size_t> representative;    // smallest column attaining each unique point
  std::vector<std::size_t> membership;        // column -> unique point id
  std::size_t merged_near_duplicates = 0;     // columns merged without being bit-identical

  std::size_t mu() const noexcept { return unique_points.rows(); }
  std::span<const double> point(std::size_t k) const { return unique_points.row(k); }
};

/// Groups columns whose beta values agree within tol_dedup in max-norm. Each
/// column joins the first (lowest representative) unique point it matches.
DistinctRange distinct_values(const BasicFunctionTable& table, double tol_dedup);

/// Max-norm distance between two points of equal dimension.
double max_norm_distance(std::span<const double> a, std::span<const double> b);

}  // namespace latnmf
