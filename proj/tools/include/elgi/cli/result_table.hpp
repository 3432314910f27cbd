#ifndef ELGI_CLI_RESULT_TABLE_HPP
#define ELGI_CLI_RESULT_TABLE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "elgi/cli/run_config.hpp"

namespace elgi::cli {

// Flat numeric result set shared by all commands. Boolean columns hold 0/1.
struct ResultTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

// Locale-independent formatting with 12 significant digits ('.' decimal
// separator, general format), used for every number emitted in CSV and JSON.
std::string format_number(double value);

// CSV: header row, LF line endings, UTF-8.
std::string write_csv(const ResultTable& table);

// Inverse of write_csv, used by round-trip tests and downstream tooling.
ResultTable parse_csv(const std::string& text);

// JSON document {"config": {...}, "rows": [...]} where rows mirror the CSV
// columns.
std::string write_json(const RunConfig& config, const ResultTable& table);

}  // namespace elgi::cli

#endif  // ELGI_CLI_RESULT_TABLE_HPP
