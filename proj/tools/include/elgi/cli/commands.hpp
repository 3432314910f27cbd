#ifndef ELGI_CLI_COMMANDS_HPP
#define ELGI_CLI_COMMANDS_HPP

#include <optional>
#include <string>

#include "elgi/cli/result_table.hpp"
#include "elgi/cli/run_config.hpp"
#include "elgi/cli/svg.hpp"

namespace elgi::cli {

struct CommandOutput {
  ResultTable table;
  std::optional<SvgChart> chart;  // populated when the command supports SVG
};

CommandOutput run_probabilities(const RunConfig& config);
CommandOutput run_deficit(const RunConfig& config);
CommandOutput run_sweep(const RunConfig& config);
CommandOutput run_joint3(const RunConfig& config);
CommandOutput run_feasibility(const RunConfig& config);
CommandOutput run_sample(const RunConfig& config);

// Dispatches the command and serializes per config.format. The rendered
// document (CSV, JSON, or SVG) is returned as a string.
std::string render_output(const RunConfig& config);

// Full CLI: parses argv (flags > JSON config file > ELGI_SEED env >
// defaults), runs the command and writes to --out or stdout. Returns the
// process exit code; every error path prints a single-line diagnostic.
int run(int argc, const char* const* argv);

}  // namespace elgi::cli

#endif  // ELGI_CLI_COMMANDS_HPP
