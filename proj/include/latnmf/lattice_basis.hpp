#pragma once

#include <cstddef>
#include <vector>

#include "latnmf/basic_function.hpp"
#include "latnmf/matrix.hpp"
#include "latnmf/polytope.hpp"
#include "latnmf/tolerance.hpp"

namespace latnmf {

/// Row i holds the convex weights of beta(i) over the (reordered) vertices.
struct ConvexExpansion {
  DenseMatrix coefficients;  // m x d
};

/// Positive basis of a minimal lattice-subspace, rows b_1..b_d, together with
/// a node column for each basis vector.
struct PositiveBasis {
  DenseMatrix vectors;              // d x m
  std::vector<std::size_t> nodes;   // nodes[k]: b_k > 0 there, every other b_j = 0

  std::size_t size() const noexcept { return vectors.rows(); }
};

/// Expands every beta(i) over the vertices. Values that coincide with a vertex
/// (within tol_dedup) get the exact indicator row; the rest come from a
/// Phase-I LP. Equal values share one LP solve.
/// Throws FactorizationError(Internal) if some value is not covered.
ConvexExpansion expand_in_vertices(const BasicFunctionTable& table, const VertexSet& vs,
                                   const DistinctRange& range, const ToleranceConfig& tol);

/// Extension vectors y_k(i) = xi_k(i) · y(i) for k = r+1..d, as a (d-r) x m matrix.
DenseMatrix synthesize_vectors(const ConvexExpansion& expansion, const std::vector<double>& sums,
                               std::size_t r);

/// Lifted vertex matrix. Column i < r is (P_i, 0); column r+k is
/// (P_{r+k}, e_k) / 2. With d = r it is the matrix with columns P_1..P_r.
DenseMatrix build_L(const VertexSet& vs);

/// B = L^{-1} · Y. Entries within tol_node · max|B| below zero are clamped;
/// anything more negative throws FactorizationError(NegativeBasis).
DenseMatrix positive_basis(const DenseMatrix& l, const DenseMatrix& y, const ToleranceConfig& tol);

/// For each row k, the smallest column where row k exceeds tol_node · max|B|
/// and every other row is within that threshold of zero.
/// Throws FactorizationError(NodeNotFound) if some row has no node.
std::vector<std::size_t> find_nodes(const DenseMatrix& b, double tol_node);

}  // namespace latnmf
