#pragma once

#include <Eigen/Dense>
#include <charconv>
#include <cmath>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

namespace qho::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitValidation = 2,
  kExitCheckFailed = 3,
};

/// Shortest decimal that parses back to the same double.
inline std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

inline Json matrix_json(const Eigen::MatrixXd& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Simple CSV table; every cell already formatted.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string str() const {
    std::string out;
    auto line = [&out](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out += ',';
        out += cells[i];
      }
      out += '\n';
    };
    line(header);
    for (const auto& r : rows) line(r);
    return out;
  }
};

/// One named numeric check: `measured` compared against `tolerance`.
struct Check {
  std::string name;
  double measured = 0.0;
  double tolerance = 0.0;
  bool at_least = false;  ///< pass when measured >= tolerance instead of <=

  bool passed() const { return at_least ? measured >= tolerance : measured <= tolerance; }

  Json to_json() const {
    return Json{{"name", name},
                {"measured", measured},
                {"comparison", at_least ? ">=" : "<="},
                {"tolerance", tolerance},
                {"pass", passed()}};
  }
};

/// Result of running a command: the report body (or CSV text) and exit code.
struct Outcome {
  Json body;
  CsvTable table;
  bool csv = false;
  int exit_code = kExitOk;
};

}  // namespace qho::cli
