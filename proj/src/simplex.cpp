#include "latnmf/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "latnmf/error.hpp"

namespace latnmf {

namespace {

class PhaseOneTableau {
 public:
  PhaseOneTableau(const DenseMatrix& aeq, std::span<const double> beq)
      : k_(aeq.rows()), q_(aeq.cols()), width_(q_ + k_ + 1), t_(k_ * width_, 0.0),
        z_(width_, 0.0), basis_(k_), sign_(k_, 1.0) {
    const double scale = std::max({1.0, aeq.max_abs(), max_abs(beq)});
    eps_ = 1e-11 * scale;
    for (std::size_t i = 0; i < k_; ++i) {
      sign_[i] = beq[i] < 0.0 ? -1.0 : 1.0;
      for (std::size_t j = 0; j < q_; ++j) at(i, j) = sign_[i] * aeq(i, j);
      at(i, q_ + i) = 1.0;
      at(i, width_ - 1) = sign_[i] * beq[i];
      basis_[i] = q_ + i;
    }
    // Reduced costs for minimizing the sum of artificials.
    for (std::size_t i = 0; i < k_; ++i) {
      for (std::size_t j = 0; j < q_; ++j) z_[j] -= at(i, j);
      z_[width_ - 1] -= at(i, width_ - 1);
    }
  }

  /// Runs to optimality; returns the number of pivots.
  std::size_t run(std::size_t cap) {
    std::size_t iterations = 0;
    for (;;) {
      // Bland: lowest-index improving column. Artificials never re-enter.
      std::size_t entering = q_;
      for (std::size_t j = 0; j < q_; ++j) {
        if (z_[j] < -eps_) {
          entering = j;
          break;
        }
      }
      if (entering == q_) return iterations;

      std::size_t leaving = k_;
      double best = 0.0;
      for (std::size_t i = 0; i < k_; ++i) {
        const double a = at(i, entering);
        if (a <= eps_) continue;
        const double ratio = at(i, width_ - 1) / a;
        if (leaving == k_) {
          best = ratio;
          leaving = i;
          continue;
        }
        const double slack = 1e-12 * (1.0 + std::abs(best));
        if (ratio < best - slack) {
          best = ratio;
          leaving = i;
        } else if (ratio <= best + slack && basis_[i] < basis_[leaving]) {
          best = std::min(best, ratio);
          leaving = i;
        }
      }
      // The Phase-I objective is bounded below, so an improving column always
      // has a positive entry up to round-off; treat the rest as optimal.
      if (leaving == k_) {
        z_[entering] = 0.0;
        continue;
      }
      if (++iterations > cap) {
        throw FactorizationError(ErrorKind::SimplexStalled,
                                 "simplex stalled after " + std::to_string(cap) + " pivots");
      }
      pivot(leaving, entering);
    }
  }

  double objective() const { return -z_[width_ - 1]; }
  const std::vector<std::size_t>& basis() const { return basis_; }
  double rhs(std::size_t i) const { return t_[i * width_ + width_ - 1]; }
  double sign(std::size_t i) const { return sign_[i]; }

 private:
  static double max_abs(std::span<const double> v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
  }

  double& at(std::size_t i, std::size_t j) { return t_[i * width_ + j]; }
  double at(std::size_t i, std::size_t j) const { return t_[i * width_ + j]; }

  void pivot(std::size_t row, std::size_t col) {
    const double p = at(row, col);
    for (std::size_t j = 0; j < width_; ++j) at(row, j) /= p;
    at(row, col) = 1.0;
    for (std::size_t i = 0; i < k_; ++i) {
      if (i == row) continue;
      const double f = at(i, col);
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < width_; ++j) at(i, j) -= f * at(row, j);
      at(i, col) = 0.0;
      if (at(i, width_ - 1) < 0.0 && at(i, width_ - 1) > -eps_) at(i, width_ - 1) = 0.0;
    }
    const double f = z_[col];
    if (f != 0.0) {
      for (std::size_t j = 0; j < width_; ++j) z_[j] -= f * at(row, j);
      z_[col] = 0.0;
    }
    basis_[row] = col;
  }

  std::size_t k_;
  std::size_t q_;
  std::size_t width_;
  std::vector<double> t_;
  std::vector<double> z_;
  std::vector<std::size_t> basis_;
  std::vector<double> sign_;
  double eps_ = 0.0;
};

}  // namespace

FeasibilityResult phase_one_feasible(const FeasibilityProblem& problem, double tol_feas) {
  const DenseMatrix& aeq = problem.aeq;
  const std::size_t k = aeq.rows();
  const std::size_t q = aeq.cols();
  if (problem.beq.size() != k) {
    throw FactorizationError(ErrorKind::ShapeMismatch,
                             "feasibility problem: beq has " + std::to_string(problem.beq.size()) +
                                 " entries for " + std::to_string(k) + " constraints");
  }

  FeasibilityResult result;
  result.x.assign(q, 0.0);
  double beq_norm = 0.0;
  for (double b : problem.beq) beq_norm = std::max(beq_norm, std::abs(b));

  PhaseOneTableau tableau(aeq, problem.beq);
  result.iterations = tableau.run(50 * (k + q) + 1000);
  result.phase_one_objective = std::max(0.0, tableau.objective());
  result.feasible = result.phase_one_objective <= tol_feas * (1.0 + beq_norm);

  // Recompute the basic solution from the original data.
  const auto& basis = tableau.basis();
  DenseMatrix basis_matrix(k, k);
  DenseMatrix rhs(k, 1);
  for (std::size_t i = 0; i < k; ++i) {
    const double s = tableau.sign(i);
    rhs(i, 0) = s * problem.beq[i];
    for (std::size_t c = 0; c < k; ++c) {
      const std::size_t col = basis[c];
      basis_matrix(i, c) = col < q ? s * aeq(i, col) : (col - q == i ? 1.0 : 0.0);
    }
  }
  std::vector<double> basic(k);
  try {
    const DenseMatrix xb = solve(basis_matrix, rhs, 1e-12);
    for (std::size_t c = 0; c < k; ++c) basic[c] = xb(c, 0);
  } catch (const FactorizationError&) {
    for (std::size_t c = 0; c < k; ++c) basic[c] = tableau.rhs(c);
  }
  for (std::size_t c = 0; c < k; ++c) {
    if (basis[c] < q) result.x[basis[c]] = std::max(0.0, basic[c]);
  }

  for (std::size_t i = 0; i < k; ++i) {
    double s = -problem.beq[i];
    for (std::size_t j = 0; j < q; ++j) s += aeq(i, j) * result.x[j];
    result.residual_inf = std::max(result.residual_inf, std::abs(s));
  }
  return result;
}

std::optional<std::vector<double>> convex_weights(const DenseMatrix& points,
                                                  std::span<const double> target,
                                                  double tol_feas) {
  const std::size_t count = points.rows();
  const std::size_t dim = points.cols();
  if (target.size() != dim) {
    throw FactorizationError(ErrorKind::ShapeMismatch, "convex_weights: dimension mismatch");
  }
  if (count == 0) return std::nullopt;

  FeasibilityProblem problem{DenseMatrix(dim + 1, count), std::vector<double>(dim + 1)};
  for (std::size_t j = 0; j < count; ++j) {
    for (std::size_t i = 0; i < dim; ++i) problem.aeq(i, j) = points(j, i);
    problem.aeq(dim, j) = 1.0;
  }
  std::copy(target.begin(), target.end(), problem.beq.begin());
  problem.beq[dim] = 1.0;

  FeasibilityResult result = phase_one_feasible(problem, tol_feas);
  if (!result.feasible) return std::nullopt;
  return std::move(result.x);
}

bool is_extreme_point(std::span<const double> p, const DenseMatrix& others, double tol_feas) {
  return !convex_weights(others, p, tol_feas).has_value();
}

}  // namespace latnmf
