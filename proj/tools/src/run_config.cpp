#include "elgi/cli/run_config.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace elgi::cli {

std::string to_string(Command command) {
  switch (command) {
    case Command::kProbabilities: return "probabilities";
    case Command::kDeficit: return "deficit";
    case Command::kSweep: return "sweep";
    case Command::kJoint3: return "joint3";
    case Command::kFeasibility: return "feasibility";
    case Command::kSample: return "sample";
  }
  throw std::invalid_argument("to_string: invalid Command");
}

std::string to_string(OutputFormat format) {
  switch (format) {
    case OutputFormat::kCsv: return "csv";
    case OutputFormat::kJson: return "json";
    case OutputFormat::kSvg: return "svg";
  }
  throw std::invalid_argument("to_string: invalid OutputFormat");
}

OutputFormat format_from_string(const std::string& name) {
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "json") return OutputFormat::kJson;
  if (name == "svg") return OutputFormat::kSvg;
  throw std::invalid_argument("unknown output format '" + name + "'");
}

std::vector<double> ThetaGrid::values() const {
  if (points < 1) throw std::invalid_argument("theta grid: points >= 1 required");
  std::vector<double> grid(points);
  if (points == 1) {
    grid[0] = start;
    return grid;
  }
  const double step = (stop - start) / (points - 1);
  for (int i = 0; i < points; ++i) grid[i] = start + i * step;
  grid.back() = stop;  // land on the endpoint exactly
  return grid;
}

ThetaGrid parse_theta_grid(const std::string& text) {
  const auto first = text.find(':');
  const auto second = text.find(':', first == std::string::npos ? first : first + 1);
  if (first == std::string::npos || second == std::string::npos) {
    throw std::invalid_argument("theta grid must be start:stop:points, got '" + text + "'");
  }
  ThetaGrid grid{};
  try {
    grid.start = std::stod(text.substr(0, first));
    grid.stop = std::stod(text.substr(first + 1, second - first - 1));
    const std::string points_text = text.substr(second + 1);
    const auto result = std::from_chars(points_text.data(), points_text.data() + points_text.size(),
                                        grid.points);
    if (result.ec != std::errc() || result.ptr != points_text.data() + points_text.size()) {
      throw std::invalid_argument("bad point count");
    }
  } catch (const std::exception&) {
    throw std::invalid_argument("theta grid must be start:stop:points, got '" + text + "'");
  }
  if (grid.points < 1) throw std::invalid_argument("theta grid: points >= 1 required");
  if (!std::isfinite(grid.start) || !std::isfinite(grid.stop)) {
    throw std::invalid_argument("theta grid bounds must be finite");
  }
  return grid;
}

std::vector<double> RunConfig::grid_or_theta() const {
  if (grid) return grid->values();
  if (theta) return {*theta};
  throw std::invalid_argument("either --theta or --theta-grid is required");
}

}  // namespace elgi::cli
