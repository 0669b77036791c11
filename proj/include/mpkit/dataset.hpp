#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "mpkit/sweep.hpp"

namespace mpkit {

// Ingested dataset: rows are observations, columns are variables (the usual
// export convention). The p x n variables-by-observations orientation used
// by the matrix constructors is internal; analyze() transposes.
struct Dataset {
  std::string name;
  Eigen::MatrixXd observations;  // n x p
  std::vector<std::string> column_labels;

  int n() const { return static_cast<int>(observations.rows()); }
  int p() const { return static_cast<int>(observations.cols()); }
};

struct CsvOptions {
  char delimiter = ',';
  bool has_header = true;
};

// Positions are 1-based; row counts file lines (header included).
struct CsvParseError : std::runtime_error {
  CsvParseError(int row_, int column_, const std::string& what_)
      : std::runtime_error("CSV parse error at row " + std::to_string(row_) + ", column " +
                           std::to_string(column_) + ": " + what_),
        row(row_), column(column_) {}
  int row, column;
};

struct MissingValueError : std::runtime_error {
  MissingValueError(int row_, int column_)
      : std::runtime_error("missing value at row " + std::to_string(row_) + ", column " +
                           std::to_string(column_)),
        row(row_), column(column_) {}
  int row, column;
};

struct CsvShapeError : std::runtime_error {
  explicit CsvShapeError(const std::string& what_) : std::runtime_error(what_) {}
};

struct ConstantColumnError : std::runtime_error {
  explicit ConstantColumnError(std::string label_)
      : std::runtime_error("constant column '" + label_ + "'"), label(std::move(label_)) {}
  std::string label;
};

// Locale-independent numeric CSV reader (dot decimal separator); rejects
// missing cells, non-finite values, and ragged rows.
Dataset read_csv(const std::string& path, const CsvOptions& options = {});

// Full-precision writer; a written dataset reads back bit-equal.
void write_dataset_csv(const Dataset& ds, std::ostream& out, char delimiter = ',');

struct RetentionReport {
  std::string name;
  int p = 0;
  int n = 0;
  double p_over_n = 0;
  double rho_hat = 0;
  double gk_empirical = 0;
  double gk_plugin_limit = 0;
  double cpv_empirical = 0;
  double t = 0;
};

// The tables pipeline: R from the transposed dataset, its spectrum, the GK
// and CPV fractions, the rho estimate lambda_1(R)/p, and the plug-in limit
// gk_limit(p/n, rho_hat). No normalization beyond the correlation itself.
RetentionReport analyze(const Dataset& ds, double t = 0.7);

enum class ReportFormat { kCsv, kJson };

// Stable column order (the field order above), 6 significant digits.
void write_reports(const std::vector<RetentionReport>& reports, ReportFormat format,
                   std::ostream& out);

// Sweep-table writers used by the simulate and figure commands.
void write_gk_sweep_csv(const std::vector<GkSweepRow>& rows, std::ostream& out);
void write_cpv_sweep_csv(const std::vector<CpvSweepRow>& rows, std::ostream& out);

}  // namespace mpkit
