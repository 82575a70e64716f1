#include "latnmf/polytope.hpp"

#include <string>

#include "latnmf/error.hpp"
#include "latnmf/simplex.hpp"

namespace latnmf {

VertexSet hull_vertices(const DistinctRange& range, double tol_feas) {
  const std::size_t mu = range.mu();
  std::vector<std::size_t> extreme;
  std::vector<std::size_t> others(mu > 0 ? mu - 1 : 0);
  for (std::size_t k = 0; k < mu; ++k) {
    std::size_t pos = 0;
    for (std::size_t j = 0; j < mu; ++j)
      if (j != k) others[pos++] = j;
    if (is_extreme_point(range.point(k), range.unique_points.select_rows(others), tol_feas)) {
      extreme.push_back(k);
    }
  }

  VertexSet vs;
  vs.vertices = range.unique_points.select_rows(extreme);
  for (std::size_t k : extreme) vs.source_columns.push_back(range.representative[k]);
  return vs;
}

VertexSet segment_vertices(const BasicFunctionTable& table) {
  if (table.dimension() != 2) {
    throw FactorizationError(ErrorKind::Internal, "segment_vertices needs r = 2, got r = " +
                                                      std::to_string(table.dimension()));
  }
  if (table.size() == 0) throw FactorizationError(ErrorKind::Internal, "empty basic function");
  std::size_t lo = 0;
  std::size_t hi = 0;
  for (std::size_t i = 1; i < table.size(); ++i) {
    if (table.points(i, 0) < table.points(lo, 0)) lo = i;
    if (table.points(i, 0) > table.points(hi, 0)) hi = i;
  }
  if (table.points(lo, 0) == table.points(hi, 0)) {
    throw FactorizationError(ErrorKind::Internal,
                             "basic function is constant although the rank is 2");
  }
  const std::size_t picks[] = {lo, hi};
  return VertexSet{table.points.select_rows(picks), {lo, hi}};
}

VertexSet reorder_vertices(const VertexSet& vs, double tol_rank) {
  const std::size_t r = vs.dimension();
  const std::size_t d = vs.count();
  const double scale = vs.vertices.max_abs();
  const double threshold = tol_rank * (scale > 0.0 ? scale : 1.0);

  std::vector<std::size_t> prefix;
  std::vector<std::size_t> tail;
  for (std::size_t k = 0; k < d; ++k) {
    if (prefix.size() < r) {
      prefix.push_back(k);
      if (rank_with_threshold(vs.vertices.select_rows(prefix), threshold) == prefix.size()) {
        continue;
      }
      prefix.pop_back();
    }
    tail.push_back(k);
  }
  if (prefix.size() < r) {
    throw FactorizationError(ErrorKind::Internal,
                             "only " + std::to_string(prefix.size()) + " of " + std::to_string(r) +
                                 " independent vertices found; check tol_rank");
  }

  prefix.insert(prefix.end(), tail.begin(), tail.end());
  VertexSet out;
  out.vertices = vs.vertices.select_rows(prefix);
  for (std::size_t k : prefix) out.source_columns.push_back(vs.source_columns[k]);
  return out;
}

}  // namespace latnmf
