#include "latnmf/basic_function.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "latnmf/error.hpp"

namespace latnmf {

BasicSet select_basic_set(const DenseMatrix& a, double tol_rank) {
  BasicSet set;
  set.row_indices = greedy_independent_rows(a, tol_rank);
  set.rows = a.select_rows(set.row_indices);
  return set;
}

BasicFunctionTable basic_function(const DenseMatrix& x) {
  const std::size_t r = x.rows();
  const std::size_t m = x.cols();
  BasicFunctionTable table{DenseMatrix(m, r), std::vector<double>(m, 0.0)};
  for (std::size_t i = 0; i < m; ++i) {
    double sum = 0.0;
    for (std::size_t k = 0; k < r; ++k) {
      if (x(k, i) < 0.0) {
        throw FactorizationError(ErrorKind::InvalidArgument,
                                 "basic function: negative entry in column " + std::to_string(i));
      }
      sum += x(k, i);
    }
    if (!(sum > 0.0)) {
      throw FactorizationError(ErrorKind::ZeroColumn,
                               "zero column " + std::to_string(i) + " in basic set");
    }
    table.sums[i] = sum;
    for (std::size_t k = 0; k < r; ++k) table.points(i, k) = x(k, i) / sum;
  }
  return table;
}

double max_norm_distance(std::span<const double> a, std::span<const double> b) {
  double d = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) d = std::max(d, std::abs(a[k] - b[k]));
  return d;
}

DistinctRange distinct_values(const BasicFunctionTable& table, double tol_dedup) {
  const std::size_t m = table.size();
  DistinctRange range;
  range.membership.resize(m);
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < m; ++i) {
    const auto p = table.point(i);
    std::size_t match = reps.size();
    for (std::size_t k = 0; k < reps.size(); ++k) {
      const auto q = table.point(reps[k]);
      if (max_norm_distance(p, q) <= tol_dedup) {
        match = k;
        if (!std::equal(p.begin(), p.end(), q.begin())) ++range.merged_near_duplicates;
        break;
      }
    }
    if (match == reps.size()) reps.push_back(i);
    range.membership[i] = match;
  }
  range.representative = reps;
  range.unique_points = table.points.select_rows(reps);
  return range;
}

}  // namespace latnmf
