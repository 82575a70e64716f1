#include "latnmf/matrix_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "latnmf/error.hpp"

namespace latnmf::io {

namespace {

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
  throw FactorizationError(ErrorKind::InvalidArgument,
                           "line " + std::to_string(line) + ": " + what);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_number(std::string_view field, std::size_t line) {
  field = trim(field);
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
    parse_error(line, "cannot parse '" + std::string(field) + "' as a number");
  }
  if (!std::isfinite(value)) parse_error(line, "non-finite value '" + std::string(field) + "'");
  return value;
}

std::string lowercase(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

void write_number(std::ostream& out, double v) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  out.write(buf, ptr - buf);
}

}  // namespace

MatrixFormat format_from_path(const std::filesystem::path& path) {
  return lowercase(path.extension().string()) == ".mtx" ? MatrixFormat::MatrixMarket
                                                        : MatrixFormat::Csv;
}

std::optional<MatrixFormat> parse_format(std::string_view name) {
  if (name == "csv") return MatrixFormat::Csv;
  if (name == "mtx") return MatrixFormat::MatrixMarket;
  return std::nullopt;
}

const char* extension(MatrixFormat format) {
  return format == MatrixFormat::MatrixMarket ? ".mtx" : ".csv";
}

DenseMatrix read_csv(std::istream& in) {
  std::vector<double> values;
  std::size_t cols = 0;
  std::size_t rows = 0;
  std::string text;
  for (std::size_t line = 1; std::getline(in, text); ++line) {
    std::string_view view = trim(text);
    if (line == 1 && view.starts_with("\xEF\xBB\xBF")) view = trim(view.substr(3));
    if (view.empty()) continue;
    std::size_t count = 0;
    std::size_t start = 0;
    for (;;) {
      const std::size_t comma = view.find(',', start);
      values.push_back(parse_number(view.substr(start, comma - start), line));
      ++count;
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (rows == 0) {
      cols = count;
    } else if (count != cols) {
      parse_error(line, "expected " + std::to_string(cols) + " values, found " +
                            std::to_string(count));
    }
    ++rows;
  }
  if (rows == 0) throw FactorizationError(ErrorKind::InvalidArgument, "empty matrix file");
  return DenseMatrix(rows, cols, std::move(values));
}

DenseMatrix read_matrix_market(std::istream& in) {
  std::string text;
  std::size_t line = 0;
  if (!std::getline(in, text)) throw FactorizationError(ErrorKind::InvalidArgument, "empty file");
  ++line;
  {
    std::istringstream header(lowercase(text));
    std::string banner, object, layout, field, symmetry;
    header >> banner >> object >> layout >> field >> symmetry;
    if (banner != "%%matrixmarket" || object != "matrix") {
      parse_error(line, "missing %%MatrixMarket matrix header");
    }
    if (layout != "array") parse_error(line, "only the dense 'array' layout is supported");
    if (field != "real" && field != "integer" && field != "double") {
      parse_error(line, "unsupported field type '" + field + "'");
    }
    if (symmetry != "general") parse_error(line, "only 'general' symmetry is supported");
  }

  std::size_t rows = 0;
  std::size_t cols = 0;
  bool have_size = false;
  std::vector<double> column_major;
  while (std::getline(in, text)) {
    ++line;
    std::string_view view = trim(text);
    if (view.empty() || view.front() == '%') continue;
    std::istringstream tokens{std::string(view)};
    if (!have_size) {
      std::string r, c, extra;
      tokens >> r >> c;
      if (c.empty() || (tokens >> extra)) parse_error(line, "size line must hold rows and columns");
      const double rv = parse_number(r, line);
      const double cv = parse_number(c, line);
      if (rv < 1 || cv < 1 || rv != std::floor(rv) || cv != std::floor(cv)) {
        parse_error(line, "bad dimensions '" + std::string(view) + "'");
      }
      rows = static_cast<std::size_t>(rv);
      cols = static_cast<std::size_t>(cv);
      have_size = true;
      continue;
    }
    std::string token;
    while (tokens >> token) column_major.push_back(parse_number(token, line));
  }
  if (!have_size) throw FactorizationError(ErrorKind::InvalidArgument, "missing size line");
  if (column_major.size() != rows * cols) {
    throw FactorizationError(ErrorKind::InvalidArgument,
                             "expected " + std::to_string(rows * cols) + " values, found " +
                                 std::to_string(column_major.size()));
  }
  DenseMatrix m(rows, cols);
  for (std::size_t j = 0; j < cols; ++j)
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = column_major[j * rows + i];
  return m;
}

MatrixFormat detect_format(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::string first;
  if (in && std::getline(in, first) && first.rfind("%%MatrixMarket", 0) == 0)
    return MatrixFormat::MatrixMarket;
  return format_from_path(path);
}

DenseMatrix read_matrix(const std::filesystem::path& path, MatrixFormat format) {
  std::ifstream in(path);
  if (!in) {
    throw FactorizationError(ErrorKind::InvalidArgument, "cannot open " + path.string());
  }
  return format == MatrixFormat::MatrixMarket ? read_matrix_market(in) : read_csv(in);
}

void write_csv(std::ostream& out, const DenseMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j > 0) out << ',';
      write_number(out, m(i, j));
    }
    out << '\n';
  }
}

void write_matrix_market(std::ostream& out, const DenseMatrix& m) {
  out << "%%MatrixMarket matrix array real general\n" << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t j = 0; j < m.cols(); ++j) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      write_number(out, m(i, j));
      out << '\n';
    }
  }
}

void write_matrix(const std::filesystem::path& path, const DenseMatrix& m, MatrixFormat format) {
  std::ofstream out(path);
  if (!out) {
    throw FactorizationError(ErrorKind::InvalidArgument, "cannot write " + path.string());
  }
  if (format == MatrixFormat::MatrixMarket) {
    write_matrix_market(out, m);
  } else {
    write_csv(out, m);
  }
}

}  // namespace latnmf::io
