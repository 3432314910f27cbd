#ifndef ELGI_CLI_RUN_CONFIG_HPP
#define ELGI_CLI_RUN_CONFIG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "elgi/protocols.hpp"
#include "elgi/sampling.hpp"

namespace elgi::cli {

enum class Command { kProbabilities, kDeficit, kSweep, kJoint3, kFeasibility, kSample };
enum class OutputFormat { kCsv, kJson, kSvg };

std::string to_string(Command command);
std::string to_string(OutputFormat format);
OutputFormat format_from_string(const std::string& name);

// Inclusive linear grid parsed from "start:stop:points".
struct ThetaGrid {
  double start;
  double stop;
  int points;

  std::vector<double> values() const;
};

ThetaGrid parse_theta_grid(const std::string& text);

// Built-in default seed; can be overridden by --seed, a JSON config file, or
// the ELGI_SEED environment variable (in that precedence order).
inline constexpr std::uint64_t kDefaultSeed = 42;

struct RunConfig {
  Command command;
  double s = 0.5;
  int n = 3;
  std::optional<double> theta;
  std::optional<ThetaGrid> grid;
  MeasurementMode mode = MeasurementMode::kAnalytic;
  std::optional<ShotConfig> shots;
  std::string out;  // empty means stdout
  OutputFormat format = OutputFormat::kCsv;

  // Grid points, falling back to a singleton grid at --theta.
  std::vector<double> grid_or_theta() const;
};

}  // namespace elgi::cli

#endif  // ELGI_CLI_RUN_CONFIG_HPP
