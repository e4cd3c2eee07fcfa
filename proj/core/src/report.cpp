#include "wsnsense/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "wsnsense/errors.hpp"
#include "wsnsense/stats.hpp"

namespace wsnsense {

namespace {

constexpr const char* kCsvHeader =
    "parameter,p_value,linear_corr,nonlinear_corr,effective";

std::string fmt_p(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4e", v);
  return buf;
}

std::string fmt_corr(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

bool series_constant(const std::vector<double>& values) {
  for (const auto& v : values)
    if (v != values.front()) return false;
  return true;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.push_back("");
  return fields;
}

}  // namespace

SensitivityReport extract_effective(const ProfileDataset& dataset,
                                    double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("alpha must lie in (0, 1)");
  const std::size_t m = dataset.size();
  if (m < 3)
    throw std::invalid_argument("sensitivity extraction needs at least 3 runs");

  std::vector<double> energy(m);
  for (std::size_t i = 0; i < m; ++i)
    energy[i] = dataset.records[i].total_energy;
  const bool energy_constant = series_constant(energy);
  const Series energy_series = Series::from(energy);

  const double nan = std::numeric_limits<double>::quiet_NaN();
  SensitivityReport report;
  report.alpha = alpha;
  report.m = m;
  report.rows.reserve(kParamCount);

  for (int k = 0; k < kParamCount; ++k) {
    SensitivityRow row;
    row.parameter = param_names()[static_cast<std::size_t>(k)];

    std::vector<double> column(m);
    for (std::size_t i = 0; i < m; ++i)
      column[i] = get_param(dataset.records[i].config, k);

    if (series_constant(column)) {
      row.degenerate = true;
      row.diagnostic = "parameter column is constant";
      row.p_value = nan;
      row.corr_linear = nan;
      row.corr_nonlinear = nan;
    } else if (energy_constant) {
      row.degenerate = true;
      row.diagnostic = "energy column is constant";
      row.p_value = nan;
      row.corr_linear = nan;
      row.corr_nonlinear = nan;
    } else {
      const Series param_series = Series::from(std::move(column));
      row.corr_linear = linear_corr(param_series, energy_series);
      row.corr_nonlinear = order_m_corr(param_series, energy_series, 2);
      row.p_value = corr_p_value(row.corr_linear, m);
      row.effective = row.p_value < alpha;
    }
    report.rows.push_back(std::move(row));
  }

  std::sort(report.rows.begin(), report.rows.end(),
            [](const SensitivityRow& a, const SensitivityRow& b) {
              if (a.degenerate != b.degenerate) return b.degenerate;
              if (a.degenerate) return a.parameter < b.parameter;
              if (a.p_value != b.p_value) return a.p_value < b.p_value;
              return a.parameter < b.parameter;
            });
  return report;
}

std::string report_to_csv(const SensitivityReport& report) {
  char head[96];
  std::snprintf(head, sizeof(head), "# alpha=%.17g M=%zu\n", report.alpha,
                report.m);
  std::string out = head;
  out += kCsvHeader;
  out += '\n';
  for (const auto& row : report.rows) {
    out += row.parameter;
    out += ',' + fmt_p(row.p_value);
    out += ',' + fmt_corr(row.corr_linear);
    out += ',' + fmt_corr(row.corr_nonlinear);
    out += ',';
    out += row.degenerate ? "degenerate" : (row.effective ? "true" : "false");
    out += '\n';
  }
  return out;
}

SensitivityReport report_from_csv(std::istream& in,
                                  const std::string& origin) {
  SensitivityReport report;
  std::string line;
  long line_no = 0;
  bool header_seen = false;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      double alpha = 0.0;
      std::size_t m = 0;
      if (std::sscanf(line.c_str(), "# alpha=%lg M=%zu", &alpha, &m) == 2) {
        report.alpha = alpha;
        report.m = m;
      }
      continue;
    }
    if (!header_seen) {
      if (line != kCsvHeader)
        throw ParseError(origin + ": expected report header `" +
                             std::string(kCsvHeader) + "`",
                         line_no);
      header_seen = true;
      continue;
    }
    const auto fields = split_csv(line);
    if (fields.size() != 5)
      throw ParseError(origin + ": expected 5 fields", line_no);
    SensitivityRow row;
    row.parameter = fields[0];
    try {
      row.p_value = std::stod(fields[1]);
      row.corr_linear = std::stod(fields[2]);
      row.corr_nonlinear = std::stod(fields[3]);
    } catch (const std::exception&) {
      throw ParseError(origin + ": malformed numeric field", line_no);
    }
    if (fields[4] == "true") {
      row.effective = true;
    } else if (fields[4] == "false") {
      row.effective = false;
    } else if (fields[4] == "degenerate") {
      row.degenerate = true;
    } else {
      throw ParseError(origin + ": effective flag must be true, false or "
                                "degenerate",
                       line_no);
    }
    report.rows.push_back(std::move(row));
  }
  if (!header_seen)
    throw ParseError(origin + ": missing report header", line_no);
  return report;
}

SensitivityReport report_from_csv_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open report: " + path);
  return report_from_csv(in, path);
}

std::string report_to_text(const SensitivityReport& report) {
  static const char* kCols[] = {"parameter", "p-value", "linear",
                                "nonlinear", "effective"};
  std::vector<std::array<std::string, 5>> cells;
  cells.reserve(report.rows.size());
  std::size_t effective_count = 0;
  for (const auto& row : report.rows) {
    char p[32], lin[32], nonlin[32];
    std::snprintf(p, sizeof(p), "%.4e", row.p_value);
    std::snprintf(lin, sizeof(lin), "%.4f", row.corr_linear);
    std::snprintf(nonlin, sizeof(nonlin), "%.4f", row.corr_nonlinear);
    std::string flag = row.degenerate ? "degenerate"
                       : (row.effective ? "yes" : "no");
    if (row.effective) ++effective_count;
    cells.push_back({row.parameter, p, lin, nonlin, flag});
  }

  std::array<std::size_t, 5> width{};
  for (std::size_t c = 0; c < 5; ++c) width[c] = std::string(kCols[c]).size();
  for (const auto& row : cells)
    for (std::size_t c = 0; c < 5; ++c)
      width[c] = std::max(width[c], row[c].size());

  auto pad = [](const std::string& s, std::size_t w) {
    return s + std::string(w - s.size(), ' ');
  };

  std::string out;
  for (std::size_t c = 0; c < 5; ++c) {
    out += (c + 1 < 5) ? pad(kCols[c], width[c]) + "  " : kCols[c];
  }
  out += '\n';
  out += std::string(out.size() - 1, '-');
  out += '\n';
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < 5; ++c) {
      out += (c + 1 < 5) ? pad(row[c], width[c]) + "  " : row[c];
    }
    out += '\n';
  }
  char tail[128];
  std::snprintf(tail, sizeof(tail),
                "alpha = %g, runs = %zu, effective parameters = %zu\n",
                report.alpha, report.m, effective_count);
  out += tail;
  return out;
}

}  // namespace wsnsense
