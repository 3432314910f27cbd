#include "elgi/cli/result_table.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace elgi::cli {

std::string format_number(double value) {
  char buf[40];
  const auto result = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 12);
  return std::string(buf, result.ptr);
}

std::string write_csv(const ResultTable& table) {
  std::string out;
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c > 0) out += ',';
    out += table.columns[c];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    if (row.size() != table.columns.size()) {
      throw std::invalid_argument("write_csv: row width does not match header");
    }
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out += ',';
      out += format_number(row[c]);
    }
    out += '\n';
  }
  return out;
}

ResultTable parse_csv(const std::string& text) {
  ResultTable table;
  std::istringstream stream(text);
  std::string line;
  bool header = true;
  while (std::getline(stream, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::size_t begin = 0;
    while (true) {
      const std::size_t comma = line.find(',', begin);
      fields.push_back(line.substr(begin, comma - begin));
      if (comma == std::string::npos) break;
      begin = comma + 1;
    }
    if (header) {
      table.columns = fields;
      header = false;
      continue;
    }
    std::vector<double> row;
    row.reserve(fields.size());
    for (const auto& field : fields) {
      double value = 0.0;
      const auto result = std::from_chars(field.data(), field.data() + field.size(), value);
      if (result.ec != std::errc() || result.ptr != field.data() + field.size()) {
        throw std::invalid_argument("parse_csv: bad numeric field '" + field + "'");
      }
      row.push_back(value);
    }
    if (row.size() != table.columns.size()) {
      throw std::invalid_argument("parse_csv: row width does not match header");
    }
    table.rows.push_back(std::move(row));
  }
  if (table.columns.empty()) throw std::invalid_argument("parse_csv: empty document");
  return table;
}

namespace {

std::string json_escape(const std::string& text) {
  std::string out;
  out.reserve(text.size() + 2);
  for (char ch : text) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += ch;
    }
  }
  return out;
}

void append_kv(std::string& out, const char* key, const std::string& value, bool quote,
               bool& first) {
  if (!first) out += ',';
  first = false;
  out += '"';
  out += key;
  out += "\":";
  if (quote) {
    out += '"';
    out += json_escape(value);
    out += '"';
  } else {
    out += value;
  }
}

}  // namespace

std::string write_json(const RunConfig& config, const ResultTable& table) {
  std::string out = "{\"config\":{";
  bool first = true;
  append_kv(out, "command", to_string(config.command), true, first);
  append_kv(out, "mode", elgi::to_string(config.mode), true, first);
  append_kv(out, "s", format_number(config.s), false, first);
  append_kv(out, "n", std::to_string(config.n), false, first);
  if (config.theta) append_kv(out, "theta", format_number(*config.theta), false, first);
  if (config.grid) {
    append_kv(out, "theta_grid",
              format_number(config.grid->start) + ":" + format_number(config.grid->stop) + ":" +
                  std::to_string(config.grid->points),
              true, first);
  }
  if (config.shots) {
    append_kv(out, "shots", std::to_string(config.shots->shots), false, first);
    append_kv(out, "reps", std::to_string(config.shots->reps), false, first);
    append_kv(out, "seed", std::to_string(config.shots->seed), false, first);
    append_kv(out, "readout_flip", format_number(config.shots->readout_flip), false, first);
  }
  append_kv(out, "format", to_string(config.format), true, first);
  out += "},\"rows\":[";
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    if (r > 0) out += ',';
    out += '{';
    bool row_first = true;
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      append_kv(out, table.columns[c].c_str(), format_number(table.rows[r][c]), false, row_first);
    }
    out += '}';
  }
  out += "]}\n";
  return out;
}

}  // namespace elgi::cli
