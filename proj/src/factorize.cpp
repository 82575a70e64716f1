#include "latnmf/factorize.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>

#include "latnmf/basic_function.hpp"
#include "latnmf/error.hpp"
#include "latnmf/polytope.hpp"

namespace latnmf {

const char* to_string(Classification c) noexcept {
  switch (c) {
    case Classification::RankTwo: return "RankTwo";
    case Classification::SublatticeRank: return "SublatticeRank";
    case Classification::LatticeRank: return "LatticeRank";
    case Classification::MinimalLattice: return "MinimalLattice";
    case Classification::Trivial: return "Trivial";
  }
  return "Unknown";
}

const char* status_message(Classification c) noexcept {
  switch (c) {
    case Classification::RankTwo:
      return "the rows define a two-dimensional lattice-subspace";
    case Classification::SublatticeRank:
      return "Rank factorization, the rows of the matrix generate a sublattice";
    case Classification::LatticeRank:
      return "Rank factorization, the rows of the matrix generate a lattice-subspace";
    case Classification::MinimalLattice:
      return "factorization through a minimal lattice-subspace";
    case Classification::Trivial:
      return "trivial factorization";
  }
  return "";
}

std::pair<DenseMatrix, ZeroColumnMask> strip_zero_columns(const DenseMatrix& a1) {
  ZeroColumnMask mask;
  mask.original_width = a1.cols();
  for (std::size_t j = 0; j < a1.cols(); ++j) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a1.rows(); ++i) {
      if (a1(i, j) < 0.0) {
        throw FactorizationError(ErrorKind::InvalidArgument,
                                 "negative entry at row " + std::to_string(i + 1) + ", column " +
                                     std::to_string(j + 1));
      }
      sum += a1(i, j);
    }
    (sum > 0.0 ? mask.kept : mask.dropped).push_back(j);
  }
  if (mask.kept.empty()) throw FactorizationError(ErrorKind::ZeroMatrix, "zero matrix");
  return {a1.select_cols(mask.kept), std::move(mask)};
}

DenseMatrix reinsert_zero_columns(const DenseMatrix& v, const ZeroColumnMask& mask) {
  if (v.cols() != mask.kept.size()) {
    throw FactorizationError(ErrorKind::ShapeMismatch,
                             "V has " + std::to_string(v.cols()) + " columns, mask keeps " +
                                 std::to_string(mask.kept.size()));
  }
  DenseMatrix out(v.rows(), mask.original_width);
  for (std::size_t c = 0; c < mask.kept.size(); ++c)
    for (std::size_t k = 0; k < v.rows(); ++k) out(k, mask.kept[c]) = v(k, c);
  return out;
}

DenseMatrix build_F(const DenseMatrix& a, const PositiveBasis& basis) {
  const std::size_t d = basis.size();
  if (basis.nodes.size() != d) {
    throw FactorizationError(ErrorKind::ShapeMismatch, "one node per basis vector required");
  }
  if (basis.vectors.cols() != a.cols()) {
    throw FactorizationError(ErrorKind::ShapeMismatch, "basis width differs from A");
  }
  DenseMatrix f(a.rows(), d);
  for (std::size_t k = 0; k < d; ++k) {
    const std::size_t node = basis.nodes[k];
    const double scale = 1.0 / basis.vectors(k, node);
    for (std::size_t i = 0; i < a.rows(); ++i) f(i, k) = a(i, node) * scale;
  }
  return f;
}

Classification classify(std::size_t r, std::size_t d, std::size_t mu, std::size_t m) {
  if (!(r <= d && d <= mu && mu <= m) || r == 0) {
    throw FactorizationError(ErrorKind::InvalidArgument,
                             "classify: expected 0 < r <= d <= mu <= m, got r=" +
                                 std::to_string(r) + " d=" + std::to_string(d) +
                                 " mu=" + std::to_string(mu) + " m=" + std::to_string(m));
  }
  if (d == m) return Classification::Trivial;
  if (r == 2) return Classification::RankTwo;
  if (mu == r) return Classification::SublatticeRank;
  if (d == r) return Classification::LatticeRank;
  return Classification::MinimalLattice;
}

double residual_inf(const DenseMatrix& a1, const DenseMatrix& f, const DenseMatrix& v) {
  return (a1 - f * v).max_abs();
}

namespace {

class StageClock {
 public:
  explicit StageClock(std::vector<StageTiming>& sink) : sink_(sink) {}

  template <class Fn>
  auto run(const char* stage, Fn&& fn) {
    const auto start = std::chrono::steady_clock::now();
    struct Record {
      std::vector<StageTiming>& sink;
      const char* stage;
      std::chrono::steady_clock::time_point start;
      ~Record() {
        const std::chrono::duration<double, std::milli> ms =
            std::chrono::steady_clock::now() - start;
        sink.push_back({stage, ms.count()});
      }
    } record{sink_, stage, start};
    try {
      return fn();
    } catch (const FactorizationError& e) {
      if (!e.stage().empty()) throw;
      throw FactorizationError(e.kind(), std::string(stage) + ": " + e.what(), stage);
    }
  }

 private:
  std::vector<StageTiming>& sink_;
};

}  // namespace

Factorization factorize(const DenseMatrix& a1, const FactorizeOptions& options) {
  const ToleranceConfig& tol = options.tol;
  tol.validate();

  Factorization out;
  StageClock clock(out.timings);

  auto [a, mask] = clock.run("strip", [&] { return strip_zero_columns(a1); });
  out.dropped_zero_columns = mask.dropped;
  if (!mask.dropped.empty()) out.warnings.emplace_back("the matrix has zero columns");

  const BasicSet basic = clock.run("basic_set", [&] { return select_basic_set(a, tol.tol_rank); });
  out.basic_rows = basic.row_indices;
  out.r = basic.rank();

  const BasicFunctionTable table =
      clock.run("basic_function", [&] { return basic_function(basic.rows); });
  const DistinctRange range =
      clock.run("distinct_values", [&] { return distinct_values(table, tol.tol_dedup); });
  out.mu = range.mu();
  if (range.merged_near_duplicates > 0) {
    out.warnings.push_back(std::to_string(range.merged_near_duplicates) +
                           " basic-function value(s) merged within tol_dedup");
  }

  VertexSet vertices = clock.run("vertices", [&] {
    return out.r == 2 ? segment_vertices(table) : hull_vertices(range, tol.tol_feas);
  });
  vertices = clock.run("reorder", [&] { return reorder_vertices(vertices, tol.tol_rank); });

  const std::size_t d = vertices.count();
  const std::size_t n = a1.rows();
  const std::size_t m0 = a1.cols();
  out.p = d;
  out.extension_count = d - out.r;
  out.classification =
      clock.run("classify", [&] { return classify(out.r, d, out.mu, a.cols()); });
  for (std::size_t c : vertices.source_columns) out.vertex_source_columns.push_back(mask.kept[c]);

  if (d >= std::min(n, m0)) {
    const std::string msg = "the intermediate dimension is equal to " + std::to_string(d) +
                            " (>= min(n, m) = " + std::to_string(std::min(n, m0)) + ")";
    if (options.strict) throw FactorizationError(ErrorKind::StrictAbort, msg, "strict");
    out.warnings.push_back(msg);
  }

  DenseMatrix y = basic.rows;
  if (d > out.r) {
    y = clock.run("expansion", [&] {
      const ConvexExpansion xi = expand_in_vertices(table, vertices, range, tol);
      return basic.rows.stack(synthesize_vectors(xi, table.sums, out.r));
    });
  }

  PositiveBasis basis;
  basis.vectors = clock.run("basis", [&] { return positive_basis(build_L(vertices), y, tol); });
  basis.nodes = clock.run("nodes", [&] { return find_nodes(basis.vectors, tol.tol_node); });

  clock.run("assemble", [&] {
    // Node columns carry exactly one nonzero per column.
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t j = 0; j < d; ++j)
        if (j != k) basis.vectors(j, basis.nodes[k]) = 0.0;
    out.F = build_F(a, basis);
    out.V = reinsert_zero_columns(basis.vectors, mask);
    for (std::size_t node : basis.nodes) out.nodes.push_back(mask.kept[node]);
    return 0;
  });

  out.residual_inf = clock.run("verify", [&] {
    const double res = residual_inf(a1, out.F, out.V);
    const double bound = tol.tol_recon * (1.0 + a1.max_abs());
    if (!(res <= bound)) {
      throw FactorizationError(ErrorKind::Internal, "reconstruction residual " +
                                                        std::to_string(res) + " exceeds " +
                                                        std::to_string(bound));
    }
    return res;
  });
  return out;
}

}  // namespace latnmf
