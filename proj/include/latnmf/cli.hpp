#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "latnmf/factorize.hpp"

namespace latnmf::cli {

enum ExitCode : int {
  kSuccess = 0,
  kInputError = 1,      // parse or validation failure
  kNumericalError = 2,  // node not found, singular L, ...
  kStrictAbort = 3,     // --strict and d >= min(n, m)
};

/// Summary written next to F and V. Column and row indices are 1-based so
/// they match the input file.
struct RunReport {
  std::string status;
  std::string classification;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t p = 0;
  std::size_t r = 0;
  std::size_t mu = 0;
  std::vector<std::size_t> basic_rows;
  std::vector<std::size_t> nodes;
  std::vector<std::size_t> vertex_source_columns;
  double residual_inf = 0.0;
  std::vector<std::size_t> dropped_zero_columns;
  std::vector<std::string> warnings;
  std::vector<StageTiming> timings_ms;
};

RunReport make_report(const Factorization& f, std::size_t n, std::size_t m);
std::string to_json(const RunReport& report);
std::string to_text(const RunReport& report);

/// Entry point of the `factorize` tool; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace latnmf::cli
