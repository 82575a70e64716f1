#pragma once

#include <stdexcept>
#include <string>

namespace latnmf {

enum class ErrorKind {
  ZeroMatrix,
  ZeroColumn,
  SingularBasis,
  NodeNotFound,
  NegativeBasis,
  SimplexStalled,
  ShapeMismatch,
  InvalidArgument,
  Internal,
  StrictAbort,
};

const char* to_string(ErrorKind kind) noexcept;

/// Error raised by every stage of the factorization pipeline.
///
/// `stage()` names the pipeline step that failed ("strip", "basis", ...) and
/// is empty when the error comes from a standalone call.
class FactorizationError : public std::runtime_error {
 public:
  FactorizationError(ErrorKind kind, const std::string& message, std::string stage = {})
      : std::runtime_error(message), kind_(kind), stage_(std::move(stage)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& stage() const noexcept { return stage_; }

  /// True for failures that indicate numerical breakdown rather than bad input.
  bool is_numerical() const noexcept;

 private:
  ErrorKind kind_;
  std::string stage_;
};

}  // namespace latnmf
