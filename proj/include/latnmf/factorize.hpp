#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "latnmf/lattice_basis.hpp"
#include "latnmf/matrix.hpp"
#include "latnmf/tolerance.hpp"

namespace latnmf {

enum class Classification {
  RankTwo,         // r = 2, hence d = 2
  SublatticeRank,  // mu = r: the rows span a sublattice
  LatticeRank,     // d = r < mu: the rows span a lattice-subspace
  MinimalLattice,  // r < d < m
  Trivial,         // d = m
};

const char* to_string(Classification c) noexcept;

/// Status line reported for each classification.
const char* status_message(Classification c) noexcept;

/// Which columns of the input survived zero-column removal.
struct ZeroColumnMask {
  std::size_t original_width = 0;
  std::vector<std::size_t> kept;
  std::vector<std::size_t> dropped;
};

/// Removes columns whose sum is zero. Throws FactorizationError(ZeroMatrix)
/// if nothing is left and FactorizationError(InvalidArgument) on a negative
/// entry.
std::pair<DenseMatrix, ZeroColumnMask> strip_zero_columns(const DenseMatrix& a1);

/// Puts p-length zero columns back at the dropped positions.
DenseMatrix reinsert_zero_columns(const DenseMatrix& v, const ZeroColumnMask& mask);

/// Column k of F is column nodes[k] of A divided by B[k][nodes[k]].
DenseMatrix build_F(const DenseMatrix& a, const PositiveBasis& basis);

/// Trivial if d = m; else RankTwo if r = 2; else SublatticeRank if mu = r;
/// else LatticeRank if d = r; else MinimalLattice.
/// Throws FactorizationError(InvalidArgument) unless r <= d <= mu <= m.
Classification classify(std::size_t r, std::size_t d, std::size_t mu, std::size_t m);

/// Max-abs entry of A1 - F·V.
double residual_inf(const DenseMatrix& a1, const DenseMatrix& f, const DenseMatrix& v);

struct StageTiming {
  std::string stage;
  double ms = 0.0;
};

struct Factorization {
  DenseMatrix F;  // n x p
  DenseMatrix V;  // p x m0, zero columns reinserted
  std::size_t p = 0;
  Classification classification = Classification::Trivial;

  std::size_t r = 0;                        // rank of A1 (size of the basic set)
  std::size_t mu = 0;                       // distinct basic-function values
  std::size_t extension_count = 0;          // d - r synthesized vectors
  std::vector<std::size_t> basic_rows;      // rows of A1 forming the basic set
  std::vector<std::size_t> nodes;           // node per row of V, original column indices
  std::vector<std::size_t> vertex_source_columns;  // original column per vertex, basis order
  std::vector<std::size_t> dropped_zero_columns;

  double residual_inf = 0.0;
  std::vector<std::string> warnings;
  std::vector<StageTiming> timings;
};

struct FactorizeOptions {
  ToleranceConfig tol;
  bool strict = false;  // abort with StrictAbort when d >= min(n, m)
};

/// Exact nonnegative factorization A1 = F·V through a positive basis of a
/// minimal lattice-subspace containing the rows of A1.
///
/// Indices in the result are 0-based. Failures are reported as
/// FactorizationError with `stage()` naming the step that failed.
Factorization factorize(const DenseMatrix& a1, const FactorizeOptions& options = {});

}  // namespace latnmf
