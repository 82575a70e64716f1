#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "latnmf/matrix.hpp"

namespace latnmf {

/// Find x >= 0 with aeq · x = beq.
struct FeasibilityProblem {
  DenseMatrix aeq;          // k x q
  std::vector<double> beq;  // length k
};

struct FeasibilityResult {
  bool feasible = false;
  std::vector<double> x;            // length q; meaningful only when feasible
  double phase_one_objective = 0.0; // sum of artificial variables at the optimum
  double residual_inf = 0.0;        // max |aeq · x - beq| of the returned x
  std::size_t iterations = 0;
};

/// Phase-I simplex on a dense tableau with Bland's pivoting rule.
///
/// The problem is declared feasible when the Phase-I optimum is at most
/// tol_feas * (1 + max|beq|). The basic solution is then recomputed from the
/// original data for the final basis, so x carries no accumulated tableau
/// round-off; entries in [-tol_feas, 0) are clamped to zero.
///
/// Throws FactorizationError(SimplexStalled) if the iteration cap is hit and
/// FactorizationError(ShapeMismatch) for inconsistent dimensions.
FeasibilityResult phase_one_feasible(const FeasibilityProblem& problem, double tol_feas);

/// Weights w >= 0, sum w = 1 with sum_j w_j · points.row(j) = target, or
/// nullopt when target lies outside the convex hull of the points.
std::optional<std::vector<double>> convex_weights(const DenseMatrix& points,
                                                  std::span<const double> target, double tol_feas);

/// True iff p is not a convex combination of `others` (rows), i.e. p is an
/// extreme point of {p} ∪ others. An empty `others` makes p extreme.
bool is_extreme_point(std::span<const double> p, const DenseMatrix& others, double tol_feas);

}  // namespace latnmf
