#pragma once

namespace latnmf {

struct ToleranceConfig {
  double tol_rank = 1e-9;   // relative pivot threshold for rank decisions
  double tol_node = 1e-6;   // zero threshold for node detection, relative to max|B|
  double tol_dedup = 1e-9;  // max-norm equality of basic-function values
  double tol_feas = 1e-9;   // LP feasibility
  double tol_recon = 1e-8;  // reconstruction residual, relative to 1 + max|A|

  /// Throws FactorizationError(InvalidArgument) if any tolerance is negative
  /// or not finite.
  void validate() const;
};

}  // namespace latnmf
