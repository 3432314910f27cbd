#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "elgi/cli/commands.hpp"

namespace elgi::cli {

namespace {

// Raw option storage; only the subcommand that actually parsed writes here.
struct RawOptions {
  double s = 0.5;
  int n = 3;
  double theta = 0.0;
  std::string theta_grid;
  std::string mode = "analytic";
  std::uint64_t shots = 4096;
  int reps = 10;
  std::uint64_t seed = kDefaultSeed;
  double readout_flip = 0.0;
  std::string out;
  std::string format = "csv";
  std::string config_file;
};

void add_common_options(CLI::App* sub, RawOptions& raw) {
  sub->add_option("--s", raw.s, "spin (half-integer: 0.5, 1, 1.5, ...)");
  sub->add_option("--n", raw.n, "number of equidistant measurements");
  sub->add_option("--theta", raw.theta, "total rotation angle in radians");
  sub->add_option("--theta-grid", raw.theta_grid, "grid start:stop:points");
  sub->add_option("--mode", raw.mode, "cnot|anticnot|inrm|analytic");
  sub->add_option("--shots", raw.shots, "shots per sampled table");
  sub->add_option("--reps", raw.reps, "independent repetitions");
  sub->add_option("--seed", raw.seed, "RNG seed (also: ELGI_SEED env var)");
  sub->add_option("--readout-flip", raw.readout_flip, "readout flip probability");
  sub->add_option("--out", raw.out, "output path (default: stdout)");
  sub->add_option("--format", raw.format, "csv|json|svg");
  sub->add_option("--config", raw.config_file, "JSON config file (flags take precedence)");
}

std::uint64_t parse_seed_text(const std::string& text, const char* origin) {
  std::uint64_t value = 0;
  const auto result = std::from_chars(text.data(), text.data() + text.size(), value);
  if (result.ec != std::errc() || result.ptr != text.data() + text.size()) {
    throw std::invalid_argument(std::string(origin) + ": invalid seed '" + text + "'");
  }
  return value;
}

Command command_from_name(const std::string& name) {
  if (name == "probabilities") return Command::kProbabilities;
  if (name == "deficit") return Command::kDeficit;
  if (name == "sweep") return Command::kSweep;
  if (name == "joint3") return Command::kJoint3;
  if (name == "feasibility") return Command::kFeasibility;
  if (name == "sample") return Command::kSample;
  throw std::invalid_argument("unknown command '" + name + "'");
}

RunConfig build_config(CLI::App* sub, RawOptions& raw) {
  auto given = [&](const char* flag) { return sub->count(flag) > 0; };

  // JSON config file fills in whatever the command line left unset.
  bool cfg_theta = false, cfg_grid = false, cfg_shots = false, cfg_seed = false;
  bool cfg_reps = false, cfg_flip = false;
  if (given("--config") || !raw.config_file.empty()) {
    std::ifstream file(raw.config_file);
    if (!file) throw std::invalid_argument("cannot read config file '" + raw.config_file + "'");
    nlohmann::json doc;
    try {
      file >> doc;
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument("config file '" + raw.config_file + "': " + e.what());
    }
    if (!doc.is_object()) throw std::invalid_argument("config file must hold a JSON object");
    for (const auto& [key, value] : doc.items()) {
      if (key == "s") {
        if (!given("--s")) raw.s = value.get<double>();
      } else if (key == "n") {
        if (!given("--n")) raw.n = value.get<int>();
      } else if (key == "theta") {
        if (!given("--theta")) {
          raw.theta = value.get<double>();
          cfg_theta = true;
        }
      } else if (key == "theta_grid") {
        if (!given("--theta-grid")) {
          raw.theta_grid = value.get<std::string>();
          cfg_grid = true;
        }
      } else if (key == "mode") {
        if (!given("--mode")) raw.mode = value.get<std::string>();
      } else if (key == "shots") {
        if (!given("--shots")) {
          raw.shots = value.get<std::uint64_t>();
          cfg_shots = true;
        }
      } else if (key == "reps") {
        if (!given("--reps")) {
          raw.reps = value.get<int>();
          cfg_reps = true;
        }
      } else if (key == "seed") {
        if (!given("--seed")) {
          raw.seed = value.get<std::uint64_t>();
          cfg_seed = true;
        }
      } else if (key == "readout_flip") {
        if (!given("--readout-flip")) {
          raw.readout_flip = value.get<double>();
          cfg_flip = true;
        }
      } else if (key == "out") {
        if (!given("--out")) raw.out = value.get<std::string>();
      } else if (key == "format") {
        if (!given("--format")) raw.format = value.get<std::string>();
      } else {
        throw std::invalid_argument("config file: unknown key '" + key + "'");
      }
    }
  }

  RunConfig config;
  config.command = command_from_name(sub->get_name());
  config.s = raw.s;
  config.n = raw.n;
  config.mode = mode_from_string(raw.mode);
  config.out = raw.out;
  config.format = format_from_string(raw.format);

  const bool flag_theta = given("--theta");
  const bool flag_grid = given("--theta-grid");
  if (flag_theta && flag_grid) {
    throw std::invalid_argument("--theta and --theta-grid are mutually exclusive");
  }
  if (flag_theta) {
    config.theta = raw.theta;
  } else if (flag_grid) {
    config.grid = parse_theta_grid(raw.theta_grid);
  } else if (cfg_theta && cfg_grid) {
    throw std::invalid_argument("config file: theta and theta_grid are mutually exclusive");
  } else if (cfg_theta) {
    config.theta = raw.theta;
  } else if (cfg_grid) {
    config.grid = parse_theta_grid(raw.theta_grid);
  }

  const bool sampling_requested = given("--shots") || cfg_shots || config.command == Command::kSample;
  if (sampling_requested) {
    ShotConfig shot;
    shot.shots = raw.shots;
    shot.reps = raw.reps;
    shot.readout_flip = raw.readout_flip;
    if (given("--seed") || cfg_seed) {
      shot.seed = raw.seed;
    } else if (const char* env = std::getenv("ELGI_SEED")) {
      shot.seed = parse_seed_text(env, "ELGI_SEED");
    } else {
      shot.seed = kDefaultSeed;
    }
    shot.validate();
    config.shots = shot;
  } else if (given("--reps") || given("--readout-flip") || cfg_reps || cfg_flip) {
    throw std::invalid_argument("--reps/--readout-flip require --shots (or the sample command)");
  }

  return config;
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{"entropic Leggett-Garg inequality (ELGI) simulator"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::simple);

  RawOptions raw;
  const std::pair<const char*, const char*> commands[] = {
      {"probabilities", "two-time joint probabilities over a theta grid"},
      {"deficit", "information deficit D_n at a single theta"},
      {"sweep", "information deficit over a theta grid"},
      {"joint3", "three-time joint probabilities and their pair marginals"},
      {"feasibility", "grand-distribution feasibility of quantum marginals"},
      {"sample", "finite-shot deficit estimate with repetition statistics"},
  };
  for (const auto& [name, description] : commands) {
    add_common_options(app.add_subcommand(name, description), raw);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    RunConfig config = build_config(app.get_subcommands().front(), raw);
    const std::string document = render_output(config);
    if (config.out.empty()) {
      std::cout << document;
    } else {
      std::ofstream file(config.out, std::ios::binary);
      if (!file) throw std::runtime_error("cannot open output file '" + config.out + "'");
      file << document;
      if (!file.good()) throw std::runtime_error("failed writing output file '" + config.out + "'");
    }
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "elgi: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace elgi::cli
