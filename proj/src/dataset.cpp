#include "mpkit/dataset.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>

#include <json.hpp>

#include "mpkit/enp.hpp"
#include "mpkit/matrix_stats.hpp"
#include "mpkit/mp_law.hpp"
#include "mpkit/spectrum.hpp"

namespace mpkit {
namespace {

std::string trimmed(const std::string& s) {
  size_t lo = s.find_first_not_of(" \t");
  if (lo == std::string::npos) return "";
  size_t hi = s.find_last_not_of(" \t");
  return s.substr(lo, hi - lo + 1);
}

std::vector<std::string> split_line(const std::string& line, char delimiter) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    size_t pos = line.find(delimiter, start);
    if (pos == std::string::npos) {
      out.push_back(line.substr(start));
      break;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

double parse_cell(const std::string& raw, int row, int column) {
  const std::string cell = trimmed(raw);
  if (cell.empty()) throw MissingValueError(row, column);
  double value = 0.0;
  const char* first = cell.data();
  const char* last = cell.data() + cell.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last)
    throw CsvParseError(row, column, "'" + cell + "' is not a number");
  if (!std::isfinite(value)) throw CsvParseError(row, column, "'" + cell + "' is not finite");
  return value;
}

// 6 significant digits for report fields.
std::string fmt6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

// Shortest round-trip representation for dataset cells.
std::string fmt_exact(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

Dataset read_csv(const std::string& path, const CsvOptions& options) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");

  Dataset ds;
  ds.name = std::filesystem::path(path).stem().string();

  std::vector<std::vector<double>> rows;
  std::string line;
  int line_no = 0;
  size_t width = 0;
  bool expect_header = options.has_header;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() && in.peek() == EOF) break;  // tolerate one trailing newline
    auto cells = split_line(line, options.delimiter);
    if (expect_header) {
      expect_header = false;
      width = cells.size();
      for (auto& c : cells) {
        std::string label = trimmed(c);
        if (label.size() >= 2 && label.front() == '"' && label.back() == '"')
          label = label.substr(1, label.size() - 2);
        ds.column_labels.push_back(label);
      }
      continue;
    }
    if (width == 0) width = cells.size();
    if (cells.size() != width)
      throw CsvShapeError("ragged row " + std::to_string(line_no) + ": expected " +
                          std::to_string(width) + " cells, found " + std::to_string(cells.size()));
    std::vector<double> parsed(cells.size());
    for (size_t c = 0; c < cells.size(); ++c)
      parsed[c] = parse_cell(cells[c], line_no, static_cast<int>(c) + 1);
    rows.push_back(std::move(parsed));
  }

  if (width == 0) throw CsvShapeError("empty file '" + path + "'");
  if (rows.size() < 2)
    throw CsvShapeError("need at least 2 observations, found " + std::to_string(rows.size()));

  if (ds.column_labels.empty())
    for (size_t c = 0; c < width; ++c) ds.column_labels.push_back("x" + std::to_string(c + 1));

  ds.observations.resize(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(width));
  for (size_t r = 0; r < rows.size(); ++r)
    for (size_t c = 0; c < width; ++c)
      ds.observations(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r][c];
  return ds;
}

void write_dataset_csv(const Dataset& ds, std::ostream& out, char delimiter) {
  for (int c = 0; c < ds.p(); ++c) {
    if (c) out << delimiter;
    out << (c < static_cast<int>(ds.column_labels.size()) ? ds.column_labels[c]
                                                          : "x" + std::to_string(c + 1));
  }
  out << '\n';
  for (int r = 0; r < ds.n(); ++r) {
    for (int c = 0; c < ds.p(); ++c) {
      if (c) out << delimiter;
      out << fmt_exact(ds.observations(r, c));
    }
    out << '\n';
  }
}

RetentionReport analyze(const Dataset& ds, double t) {
  if (!(t > 0.0 && t < 1.0)) throw std::invalid_argument("analyze: t must lie in (0, 1)");
  if (ds.n() < 2 || ds.p() < 1) throw std::invalid_argument("analyze: need n >= 2 and p >= 1");

  Eigen::MatrixXd variables_by_obs = ds.observations.transpose();
  Eigen::MatrixXd r;
  try {
    r = sample_correlation(variables_by_obs);
  } catch (const ConstantRowError& e) {
    const auto idx = static_cast<size_t>(e.row);
    throw ConstantColumnError(idx < ds.column_labels.size() ? ds.column_labels[idx]
                                                            : "x" + std::to_string(e.row + 1));
  }
  const Spectrum spectrum = symmetric_eigenvalues(r);

  RetentionReport report;
  report.name = ds.name;
  report.p = ds.p();
  report.n = ds.n();
  report.p_over_n = static_cast<double>(ds.p()) / ds.n();
  report.rho_hat = spectrum.largest() / ds.p();
  report.gk_empirical = gk_fraction(spectrum);
  report.cpv_empirical = cpv_fraction(spectrum, t);
  report.t = t;
  // rho_hat = 1 only on degenerate data (e.g. p = 1); the plug-in limit
  // tends to 0 there.
  report.gk_plugin_limit = report.rho_hat < 1.0 ? gk_limit(report.p_over_n, report.rho_hat) : 0.0;
  return report;
}

void write_reports(const std::vector<RetentionReport>& reports, ReportFormat format,
                   std::ostream& out) {
  if (format == ReportFormat::kCsv) {
    out << "name,p,n,p_over_n,rho_hat,gk_empirical,gk_plugin_limit,cpv_empirical,t\n";
    for (const auto& r : reports) {
      out << r.name << ',' << r.p << ',' << r.n << ',' << fmt6(r.p_over_n) << ','
          << fmt6(r.rho_hat) << ',' << fmt6(r.gk_empirical) << ',' << fmt6(r.gk_plugin_limit)
          << ',' << fmt6(r.cpv_empirical) << ',' << fmt6(r.t) << '\n';
    }
    return;
  }
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) {
    nlohmann::json obj;
    obj["name"] = r.name;
    obj["p"] = r.p;
    obj["n"] = r.n;
    obj["p_over_n"] = std::stod(fmt6(r.p_over_n));
    obj["rho_hat"] = std::stod(fmt6(r.rho_hat));
    obj["gk_empirical"] = std::stod(fmt6(r.gk_empirical));
    obj["gk_plugin_limit"] = std::stod(fmt6(r.gk_plugin_limit));
    obj["cpv_empirical"] = std::stod(fmt6(r.cpv_empirical));
    obj["t"] = std::stod(fmt6(r.t));
    arr.push_back(obj);
  }
  out << arr.dump(2) << '\n';
}

void write_gk_sweep_csv(const std::vector<GkSweepRow>& rows, std::ostream& out) {
  out << "c,rho,p,n,replications,gk_mean,gk_limit,normalized_retention,status\n";
  for (const auto& r : rows) {
    out << fmt6(r.c) << ',' << fmt6(r.rho) << ',' << r.p << ',' << r.n << ',' << r.replications
        << ',';
    if (r.error.empty()) {
      out << fmt6(r.gk_mean) << ',' << fmt6(r.gk_limit) << ',' << fmt6(r.normalized_retention)
          << ",ok\n";
    } else {
      out << ",,,\"" << r.error << "\"\n";
    }
  }
}

void write_cpv_sweep_csv(const std::vector<CpvSweepRow>& rows, std::ostream& out) {
  out << "c,rho,t,p,n,replications,cpv_mean,cpv_limit,status\n";
  for (const auto& r : rows) {
    out << fmt6(r.c) << ',' << fmt6(r.rho) << ',' << fmt6(r.t) << ',' << r.p << ',' << r.n << ','
        << r.replications << ',';
    if (r.error.empty()) {
      out << fmt6(r.cpv_mean) << ',' << fmt6(r.cpv_limit) << ",ok\n";
    } else {
      out << ",,\"" << r.error << "\"\n";
    }
  }
}

}  // namespace mpkit
