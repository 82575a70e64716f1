#pragma once

#include <cstddef>
#include <vector>

#include "latnmf/basic_function.hpp"
#include "latnmf/matrix.hpp"

namespace latnmf {

/// Vertices of the polytope spanned by the basic-function values.
struct VertexSet {
  DenseMatrix vertices;                     // d x r, one vertex per row
  std::vector<std::size_t> source_columns;  // a column i with beta(i) equal to each vertex

  std::size_t dimension() const noexcept { return vertices.cols(); }  // r
  std::size_t count() const noexcept { return vertices.rows(); }      // d
};

/// Unique points that are extreme points of the range, in unique-point order.
/// One LP feasibility test per point.
VertexSet hull_vertices(const DistinctRange& range, double tol_feas);

/// Two-dimensional case: the hull is a segment whose endpoints are the values
/// with minimum and maximum first coordinate. Minimum first; ties go to the
/// smallest column. Throws FactorizationError(Internal) if r != 2 or all
/// values coincide.
VertexSet segment_vertices(const BasicFunctionTable& table);

/// Moves vertices so the first r are linearly independent. Greedy first-wins
/// scan; vertices not taken keep their relative order at the tail.
/// Throws FactorizationError(Internal) when fewer than r independent
/// vertices exist.
VertexSet reorder_vertices(const VertexSet& vs, double tol_rank);

}  // namespace latnmf
