#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string_view>

#include "latnmf/matrix.hpp"

namespace latnmf::io {

enum class MatrixFormat { Csv, MatrixMarket };

/// ".mtx" selects MatrixMarket, anything else CSV.
MatrixFormat format_from_path(const std::filesystem::path& path);
std::optional<MatrixFormat> parse_format(std::string_view name);
/// MatrixMarket if the file starts with a `%%MatrixMarket` banner, else the
/// extension decides.
MatrixFormat detect_format(const std::filesystem::path& path);
const char* extension(MatrixFormat format);

// Readers throw FactorizationError(InvalidArgument) with the offending line
// number on malformed input.

/// One matrix row per line, comma separated, no header. Blank lines are skipped.
DenseMatrix read_csv(std::istream& in);
/// `%%MatrixMarket matrix array real general`, column-major body.
DenseMatrix read_matrix_market(std::istream& in);
DenseMatrix read_matrix(const std::filesystem::path& path, MatrixFormat format);

// Writers print 17 significant digits so values round-trip exactly.
void write_csv(std::ostream& out, const DenseMatrix& m);
void write_matrix_market(std::ostream& out, const DenseMatrix& m);
void write_matrix(const std::filesystem::path& path, const DenseMatrix& m, MatrixFormat format);

}  // namespace latnmf::io
