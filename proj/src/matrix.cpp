#include "latnmf/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "latnmf/error.hpp"

namespace latnmf {

namespace {

void require_finite(std::span<const double> values) {
  for (double v : values) {
    if (!std::isfinite(v)) {
      throw FactorizationError(ErrorKind::InvalidArgument, "matrix entries must be finite");
    }
  }
}

void require_same_shape(const DenseMatrix& a, const DenseMatrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw FactorizationError(ErrorKind::ShapeMismatch,
                             std::string(what) + ": shapes " + std::to_string(a.rows()) + "x" +
                                 std::to_string(a.cols()) + " and " + std::to_string(b.rows()) +
                                 "x" + std::to_string(b.cols()) + " differ");
  }
}

// Gaussian elimination in place; returns the number of pivots above threshold.
std::size_t eliminate(DenseMatrix& m, double threshold) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    double best = std::abs(m(rank, col));
    for (std::size_t i = rank + 1; i < m.rows(); ++i) {
      if (std::abs(m(i, col)) > best) {
        best = std::abs(m(i, col));
        pivot = i;
      }
    }
    if (best <= threshold) continue;
    if (pivot != rank) {
      auto a = m.row(pivot);
      auto b = m.row(rank);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    for (std::size_t i = rank + 1; i < m.rows(); ++i) {
      const double factor = m(i, col) / m(rank, col);
      if (factor == 0.0) continue;
      m(i, col) = 0.0;
      for (std::size_t j = col + 1; j < m.cols(); ++j) m(i, j) -= factor * m(rank, j);
    }
    ++rank;
  }
  return rank;
}

}  // namespace

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), values_(rows * cols, fill) {
  require_finite(std::span<const double>(&fill, 1));
}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> values)
    : rows_(rows), cols_(cols), values_(std::move(values)) {
  if (values_.size() != rows_ * cols_) {
    throw FactorizationError(ErrorKind::ShapeMismatch, "value count does not match shape");
  }
  require_finite(values_);
}

DenseMatrix::DenseMatrix(std::initializer_list<std::initializer_list<double>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  values_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) {
      throw FactorizationError(ErrorKind::ShapeMismatch, "ragged initializer list");
    }
    values_.insert(values_.end(), r.begin(), r.end());
  }
  require_finite(values_);
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  const std::size_t n = rows.size();
  const std::size_t c = n == 0 ? 0 : rows.front().size();
  std::vector<double> values;
  values.reserve(n * c);
  for (const auto& r : rows) {
    if (r.size() != c) throw FactorizationError(ErrorKind::ShapeMismatch, "ragged rows");
    values.insert(values.end(), r.begin(), r.end());
  }
  return DenseMatrix(n, c, std::move(values));
}

std::vector<double> DenseMatrix::column(std::size_t j) const {
  std::vector<double> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

DenseMatrix DenseMatrix::select_rows(std::span<const std::size_t> indices) const {
  DenseMatrix out(indices.size(), cols_);
  for (std::size_t k = 0; k < indices.size(); ++k) {
    auto src = row(indices[k]);
    std::copy(src.begin(), src.end(), out.row(k).begin());
  }
  return out;
}

DenseMatrix DenseMatrix::select_cols(std::span<const std::size_t> indices) const {
  DenseMatrix out(rows_, indices.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < indices.size(); ++k) out(i, k) = (*this)(i, indices[k]);
  return out;
}

DenseMatrix DenseMatrix::stack(const DenseMatrix& other) const {
  if (empty() && rows_ == 0) return other;
  if (other.rows() == 0) return *this;
  if (other.cols() != cols_) {
    throw FactorizationError(ErrorKind::ShapeMismatch, "stack: column counts differ");
  }
  std::vector<double> values(values_);
  values.insert(values.end(), other.values_.begin(), other.values_.end());
  return DenseMatrix(rows_ + other.rows(), cols_, std::move(values));
}

double DenseMatrix::max_abs() const noexcept {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::abs(v));
  return m;
}

double DenseMatrix::min_entry() const noexcept {
  if (values_.empty()) return 0.0;
  return *std::min_element(values_.begin(), values_.end());
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) {
    throw FactorizationError(ErrorKind::ShapeMismatch,
                             "product: inner dimensions " + std::to_string(a.cols()) + " and " +
                                 std::to_string(b.rows()) + " differ");
  }
  DenseMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto out = c.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      auto brow = b.row(k);
      for (std::size_t j = 0; j < b.cols(); ++j) out[j] += aik * brow[j];
    }
  }
  return c;
}

DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) {
  require_same_shape(a, b, "difference");
  DenseMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
  return c;
}

DenseMatrix operator*(double s, const DenseMatrix& a) {
  DenseMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = s * a(i, j);
  return c;
}

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
  require_same_shape(a, b, "max_abs_diff");
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

std::size_t rank_with_threshold(const DenseMatrix& m, double threshold) {
  DenseMatrix work = m;
  return eliminate(work, threshold);
}

std::size_t rank_of(const DenseMatrix& m, double tol_rank) {
  const double scale = m.max_abs();
  return rank_with_threshold(m, tol_rank * (scale > 0.0 ? scale : 1.0));
}

DenseMatrix solve(const DenseMatrix& l, const DenseMatrix& b, double tol_rank) {
  const std::size_t n = l.rows();
  if (l.cols() != n) throw FactorizationError(ErrorKind::ShapeMismatch, "solve: L is not square");
  if (b.rows() != n) {
    throw FactorizationError(ErrorKind::ShapeMismatch, "solve: right-hand side has wrong height");
  }
  const double scale = l.max_abs();
  const double threshold = tol_rank * (scale > 0.0 ? scale : 1.0);

  DenseMatrix lu = l;
  DenseMatrix x = b;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t i = col + 1; i < n; ++i)
      if (std::abs(lu(i, col)) > std::abs(lu(pivot, col))) pivot = i;
    if (std::abs(lu(pivot, col)) <= threshold) {
      throw FactorizationError(ErrorKind::SingularBasis, "singular basis matrix");
    }
    if (pivot != col) {
      auto a = lu.row(pivot);
      std::swap_ranges(a.begin(), a.end(), lu.row(col).begin());
      auto xa = x.row(pivot);
      std::swap_ranges(xa.begin(), xa.end(), x.row(col).begin());
    }
    for (std::size_t i = col + 1; i < n; ++i) {
      const double factor = lu(i, col) / lu(col, col);
      if (factor == 0.0) continue;
      for (std::size_t j = col; j < n; ++j) lu(i, j) -= factor * lu(col, j);
      for (std::size_t j = 0; j < x.cols(); ++j) x(i, j) -= factor * x(col, j);
    }
  }
  for (std::size_t ii = n; ii-- > 0;) {
    for (std::size_t j = 0; j < x.cols(); ++j) {
      double s = x(ii, j);
      for (std::size_t k = ii + 1; k < n; ++k) s -= lu(ii, k) * x(k, j);
      x(ii, j) = s / lu(ii, ii);
    }
  }
  return x;
}

std::vector<std::size_t> greedy_independent_rows(const DenseMatrix& m, double tol_rank) {
  const double scale = m.max_abs();
  if (scale == 0.0) throw FactorizationError(ErrorKind::ZeroMatrix, "zero matrix");
  const double threshold = tol_rank * scale;
  const std::size_t limit = std::min(m.rows(), m.cols());

  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < m.rows() && kept.size() < limit; ++i) {
    kept.push_back(i);
    if (rank_with_threshold(m.select_rows(kept), threshold) < kept.size()) kept.pop_back();
  }
  return kept;
}

}  // namespace latnmf
