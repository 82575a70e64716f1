#include "latnmf/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "latnmf/error.hpp"
#include "latnmf/matrix_io.hpp"

namespace latnmf::cli {

namespace {

std::vector<std::size_t> one_based(const std::vector<std::size_t>& v) {
  std::vector<std::size_t> out(v);
  for (auto& i : out) ++i;
  return out;
}

void require_nonnegative(const DenseMatrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) < 0.0) {
        std::ostringstream msg;
        msg << "negative entry " << a(i, j) << " at row " << i + 1 << ", column " << j + 1;
        throw FactorizationError(ErrorKind::InvalidArgument, msg.str(), "validate");
      }
    }
  }
}

}  // namespace

RunReport make_report(const Factorization& f, std::size_t n, std::size_t m) {
  RunReport report;
  report.status = status_message(f.classification);
  report.classification = to_string(f.classification);
  report.n = n;
  report.m = m;
  report.p = f.p;
  report.r = f.r;
  report.mu = f.mu;
  report.basic_rows = one_based(f.basic_rows);
  report.nodes = one_based(f.nodes);
  report.vertex_source_columns = one_based(f.vertex_source_columns);
  report.residual_inf = f.residual_inf;
  report.dropped_zero_columns = one_based(f.dropped_zero_columns);
  report.warnings = f.warnings;
  report.timings_ms = f.timings;
  return report;
}

std::string to_json(const RunReport& report) {
  nlohmann::ordered_json timings = nlohmann::ordered_json::object();
  for (const auto& t : report.timings_ms) timings[t.stage] = t.ms;
  nlohmann::ordered_json j = {
      {"status", report.status},
      {"classification", report.classification},
      {"n", report.n},
      {"m", report.m},
      {"p", report.p},
      {"r", report.r},
      {"mu", report.mu},
      {"basic_rows", report.basic_rows},
      {"nodes", report.nodes},
      {"vertex_source_columns", report.vertex_source_columns},
      {"residual_inf", report.residual_inf},
      {"dropped_zero_columns", report.dropped_zero_columns},
      {"warnings", report.warnings},
      {"timings_ms", timings},
  };
  return j.dump(2) + "\n";
}

std::string to_text(const RunReport& report) {
  auto list = [](const std::vector<std::size_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
    return s;
  };
  std::ostringstream out;
  out << "status: " << report.status << '\n'
      << "classification: " << report.classification << '\n'
      << "n: " << report.n << '\n'
      << "m: " << report.m << '\n'
      << "p: " << report.p << '\n'
      << "r: " << report.r << '\n'
      << "mu: " << report.mu << '\n'
      << "basic_rows: " << list(report.basic_rows) << '\n'
      << "nodes: " << list(report.nodes) << '\n'
      << "vertex_source_columns: " << list(report.vertex_source_columns) << '\n'
      << "residual_inf: " << report.residual_inf << '\n'
      << "dropped_zero_columns: " << list(report.dropped_zero_columns) << '\n';
  for (const auto& w : report.warnings) out << "warning: " << w << '\n';
  for (const auto& t : report.timings_ms) out << "time_ms." << t.stage << ": " << t.ms << '\n';
  return out.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact nonnegative matrix factorization A = F V through positive bases"};
  app.name("factorize");

  std::string input;
  std::string out_dir = ".";
  std::string format_name;
  std::string report_kind = "json";
  FactorizeOptions options;
  app.add_option("input", input, "Nonnegative matrix (CSV or MatrixMarket array)")->required();
  app.add_option("--out-dir", out_dir, "Directory for F, V and the report")
      ->capture_default_str();
  app.add_option("--format", format_name, "Format of F and V; defaults to the input format")
      ->check(CLI::IsMember({"csv", "mtx"}));
  app.add_option("--report", report_kind, "Report format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--tol-rank", options.tol.tol_rank, "Relative pivot threshold")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  app.add_option("--tol-node", options.tol.tol_node, "Node zero threshold")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  app.add_option("--tol-dedup", options.tol.tol_dedup, "Basic-function equality tolerance")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  app.add_option("--tol-feas", options.tol.tol_feas, "LP feasibility tolerance")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  app.add_option("--tol-recon", options.tol.tol_recon, "Reconstruction tolerance")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  app.add_flag("--strict", options.strict, "Abort when the intermediate dimension >= min(n, m)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "factorize: " << e.what() << '\n';
    return kInputError;
  }

  try {
    const auto input_format = io::detect_format(input);
    const auto format = format_name.empty() ? input_format : *io::parse_format(format_name);
    const DenseMatrix a = io::read_matrix(input, input_format);
    require_nonnegative(a);
    const Factorization f = factorize(a, options);
    const RunReport report = make_report(f, a.rows(), a.cols());

    const std::filesystem::path dir(out_dir);
    std::filesystem::create_directories(dir);
    io::write_matrix(dir / (std::string("F") + io::extension(format)), f.F, format);
    io::write_matrix(dir / (std::string("V") + io::extension(format)), f.V, format);
    const bool json = report_kind == "json";
    std::ofstream rep(dir / (json ? "report.json" : "report.txt"));
    rep << (json ? to_json(report) : to_text(report));
    if (!rep) throw FactorizationError(ErrorKind::InvalidArgument, "cannot write report");

    out << report.status << " (p = " << report.p << ")\n";
    for (const auto& w : report.warnings) err << "warning: " << w << '\n';
    return kSuccess;
  } catch (const FactorizationError& e) {
    err << "factorize: " << e.what() << '\n';
    if (e.kind() == ErrorKind::StrictAbort) return kStrictAbort;
    return e.is_numerical() ? kNumericalError : kInputError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "factorize: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace latnmf::cli
