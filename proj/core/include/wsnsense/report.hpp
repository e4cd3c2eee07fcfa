// Sensitivity report: per-parameter p-value, linear and order-2
// correlation against overall energy, and the alpha gate that marks a
// parameter effective. Rows sort by ascending p-value.
#ifndef WSNSENSE_REPORT_HPP
#define WSNSENSE_REPORT_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "wsnsense/profiler.hpp"

namespace wsnsense {

struct SensitivityRow {
  std::string parameter;
  double p_value = 1.0;
  double corr_linear = 0.0;
  double corr_nonlinear = 0.0;
  bool effective = false;
  bool degenerate = false;   // constant column; numeric fields are NaN
  std::string diagnostic;    // human-readable note for degenerate rows
};

struct SensitivityReport {
  std::vector<SensitivityRow> rows;  // ascending p-value, ties by name;
                                     // degenerate rows last, by name
  double alpha = 0.05;
  std::size_t m = 0;
};

// Builds one row per configuration parameter from the dataset columns.
// Constant columns are flagged degenerate and reported, never dropped.
// Requires dataset.size() >= 3.
SensitivityReport extract_effective(const ProfileDataset& dataset,
                                    double alpha);

// CSV: one `# alpha=... M=...` comment line, the pinned header
// `parameter,p_value,linear_corr,nonlinear_corr,effective`, one row per
// parameter. p-values print in scientific notation with 5 significant
// digits. Byte-stable.
std::string report_to_csv(const SensitivityReport& report);
SensitivityReport report_from_csv(std::istream& in, const std::string& origin);
SensitivityReport report_from_csv_file(const std::string& path);

// Aligned plain-text table in the style of a results summary.
std::string report_to_text(const SensitivityReport& report);

}  // namespace wsnsense

#endif
