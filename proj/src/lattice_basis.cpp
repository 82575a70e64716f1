#include "latnmf/lattice_basis.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "latnmf/error.hpp"
#include "latnmf/simplex.hpp"

namespace latnmf {

namespace {

double relative_threshold(const DenseMatrix& m, double tol) {
  const double scale = m.max_abs();
  return tol * (scale > 0.0 ? scale : 1.0);
}

}  // namespace

ConvexExpansion expand_in_vertices(const BasicFunctionTable& table, const VertexSet& vs,
                                   const DistinctRange& range, const ToleranceConfig& tol) {
  const std::size_t m = table.size();
  const std::size_t d = vs.count();
  if (vs.dimension() != table.dimension()) {
    throw FactorizationError(ErrorKind::ShapeMismatch, "vertex dimension differs from r");
  }
  ConvexExpansion expansion{DenseMatrix(m, d)};
  std::vector<std::optional<std::vector<double>>> cache(range.mu());

  for (std::size_t i = 0; i < m; ++i) {
    const auto beta = table.point(i);
    auto out = expansion.coefficients.row(i);

    std::size_t vertex = d;
    for (std::size_t k = 0; k < d && vertex == d; ++k)
      if (max_norm_distance(beta, vs.vertices.row(k)) <= tol.tol_dedup) vertex = k;
    if (vertex < d) {
      out[vertex] = 1.0;
      continue;
    }

    // Columns bit-identical to their representative reuse its expansion.
    const std::size_t u = range.membership.at(i);
    const auto rep = range.point(u);
    const bool identical = std::equal(beta.begin(), beta.end(), rep.begin());
    if (identical && cache[u]) {
      std::copy(cache[u]->begin(), cache[u]->end(), out.begin());
      continue;
    }
    auto weights = convex_weights(vs.vertices, beta, tol.tol_feas);
    if (!weights) {
      throw FactorizationError(ErrorKind::Internal,
                               "basic-function value of column " + std::to_string(i) +
                                   " lies outside the vertex hull");
    }
    std::copy(weights->begin(), weights->end(), out.begin());
    if (identical) cache[u] = std::move(weights);
  }
  return expansion;
}

DenseMatrix synthesize_vectors(const ConvexExpansion& expansion, const std::vector<double>& sums,
                               std::size_t r) {
  const DenseMatrix& xi = expansion.coefficients;
  const std::size_t m = xi.rows();
  const std::size_t d = xi.cols();
  if (sums.size() != m) throw FactorizationError(ErrorKind::ShapeMismatch, "sums length != m");
  if (d < r) throw FactorizationError(ErrorKind::InvalidArgument, "fewer vertices than r");

  DenseMatrix y(d - r, m);
  for (std::size_t k = r; k < d; ++k)
    for (std::size_t i = 0; i < m; ++i) y(k - r, i) = xi(i, k) * sums[i];
  return y;
}

DenseMatrix build_L(const VertexSet& vs) {
  const std::size_t r = vs.dimension();
  const std::size_t d = vs.count();
  if (d < r) throw FactorizationError(ErrorKind::InvalidArgument, "fewer vertices than r");
  DenseMatrix l(d, d);
  for (std::size_t c = 0; c < d; ++c) {
    const double s = c < r ? 1.0 : 0.5;
    for (std::size_t i = 0; i < r; ++i) l(i, c) = s * vs.vertices(c, i);
    if (c >= r) l(c, c) = s;
  }
  return l;
}

DenseMatrix positive_basis(const DenseMatrix& l, const DenseMatrix& y, const ToleranceConfig& tol) {
  DenseMatrix b = solve(l, y, tol.tol_rank);
  const double threshold = relative_threshold(b, tol.tol_node);
  for (std::size_t k = 0; k < b.rows(); ++k) {
    for (std::size_t i = 0; i < b.cols(); ++i) {
      if (b(k, i) >= 0.0) continue;
      if (b(k, i) < -threshold) {
        throw FactorizationError(ErrorKind::NegativeBasis,
                                 "basis vector " + std::to_string(k) + " is negative at column " +
                                     std::to_string(i));
      }
      b(k, i) = 0.0;
    }
  }
  return b;
}

std::vector<std::size_t> find_nodes(const DenseMatrix& b, double tol_node) {
  const double threshold = relative_threshold(b, tol_node);
  std::vector<std::size_t> nodes(b.rows());
  for (std::size_t k = 0; k < b.rows(); ++k) {
    bool found = false;
    for (std::size_t i = 0; i < b.cols() && !found; ++i) {
      if (b(k, i) <= threshold) continue;
      bool clean = true;
      for (std::size_t j = 0; j < b.rows() && clean; ++j)
        if (j != k && std::abs(b(j, i)) > threshold) clean = false;
      if (clean) {
        nodes[k] = i;
        found = true;
      }
    }
    if (!found) {
      throw FactorizationError(ErrorKind::NodeNotFound,
                               "node not found for basis vector " + std::to_string(k));
    }
  }
  return nodes;
}

}  // namespace latnmf
