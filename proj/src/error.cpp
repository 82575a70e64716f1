#include "latnmf/error.hpp"

#include <cmath>

#include "latnmf/tolerance.hpp"

namespace latnmf {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ZeroMatrix: return "zero matrix";
    case ErrorKind::ZeroColumn: return "zero column";
    case ErrorKind::SingularBasis: return "singular basis matrix";
    case ErrorKind::NodeNotFound: return "node not found";
    case ErrorKind::NegativeBasis: return "negative basis entry";
    case ErrorKind::SimplexStalled: return "simplex stalled";
    case ErrorKind::ShapeMismatch: return "shape mismatch";
    case ErrorKind::InvalidArgument: return "invalid argument";
    case ErrorKind::Internal: return "internal error";
    case ErrorKind::StrictAbort: return "strict mode abort";
  }
  return "unknown";
}

bool FactorizationError::is_numerical() const noexcept {
  switch (kind_) {
    case ErrorKind::SingularBasis:
    case ErrorKind::NodeNotFound:
    case ErrorKind::NegativeBasis:
    case ErrorKind::SimplexStalled:
    case ErrorKind::Internal:
      return true;
    default:
      return false;
  }
}

void ToleranceConfig::validate() const {
  const double all[] = {tol_rank, tol_node, tol_dedup, tol_feas, tol_recon};
  for (double t : all) {
    if (!std::isfinite(t) || t < 0.0) {
      throw FactorizationError(ErrorKind::InvalidArgument,
                               "tolerances must be finite and nonnegative");
    }
  }
}

}  // namespace latnmf
