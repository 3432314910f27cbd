#include "elgi/cli/commands.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "elgi/entropy.hpp"
#include "elgi/macrorealism.hpp"
#include "elgi/protocols.hpp"
#include "elgi/sampling.hpp"
#include "elgi/spin.hpp"

using elgi::spin_dimension;

namespace elgi::cli {

namespace {

// Per-grid-point sampling seeds, decorrelated from the base seed so point i
// is reproducible independent of evaluation order.
std::vector<std::uint64_t> point_seeds(std::uint64_t base_seed, std::size_t count) {
  SplitMix64 stream(base_seed);
  std::vector<std::uint64_t> seeds(count);
  for (auto& seed : seeds) seed = stream.next();
  return seeds;
}

ProbTable joint2_for(const RunConfig& config, double theta) {
  if (config.mode == MeasurementMode::kAnalytic) return analytic_joint2(config.s, theta);
  ProtocolConfig protocol{config.s, {0.0, theta}, config.mode};
  return joint2_circuit(protocol, 0, 1);
}

std::string outcome_label(int dim, int q) {
  return dim <= 10 ? std::to_string(q) : "q" + std::to_string(q);
}

}  // namespace

CommandOutput run_probabilities(const RunConfig& config) {
  const std::vector<double> grid = config.grid_or_theta();
  const int dim = spin_dimension(config.s);

  CommandOutput out;
  out.table.columns.push_back("theta");
  for (int qi = 0; qi < dim; ++qi)
    for (int qj = 0; qj < dim; ++qj)
      out.table.columns.push_back("p" + outcome_label(dim, qi) + outcome_label(dim, qj));

  std::vector<std::uint64_t> seeds;
  if (config.shots) seeds = point_seeds(config.shots->seed, grid.size());

  std::vector<SvgSeries> analytic_series(static_cast<std::size_t>(dim) * dim);
  std::vector<SvgSeries> sampled_series(static_cast<std::size_t>(dim) * dim);

  for (std::size_t g = 0; g < grid.size(); ++g) {
    const double theta = grid[g];
    const ProbTable exact = joint2_for(config, theta);
    ProbTable emitted = exact;
    if (config.shots) {
      Xoshiro256StarStar rng(seeds[g]);
      emitted = sample_table(apply_readout_noise(exact, config.shots->readout_flip),
                             config.shots->shots, rng);
    }
    std::vector<double> row{theta};
    for (int qi = 0; qi < dim; ++qi)
      for (int qj = 0; qj < dim; ++qj) {
        row.push_back(emitted.at(qi, qj));
        analytic_series[qi * dim + qj].points.emplace_back(theta, exact.at(qi, qj));
        if (config.shots) sampled_series[qi * dim + qj].points.emplace_back(theta, emitted.at(qi, qj));
      }
    out.table.rows.push_back(std::move(row));
  }

  if (config.format == OutputFormat::kSvg) {
    SvgChart chart;
    chart.title = "joint probabilities, mode " + elgi::to_string(config.mode);
    chart.x_label = "theta (rad)";
    chart.y_label = "P(q_i, q_j)";
    for (int qi = 0; qi < dim; ++qi)
      for (int qj = 0; qj < dim; ++qj) {
        auto& series = analytic_series[qi * dim + qj];
        series.name = "P(" + outcome_label(dim, qi) + "," + outcome_label(dim, qj) + ")";
        chart.series.push_back(std::move(series));
      }
    if (config.shots) {
      for (int qi = 0; qi < dim; ++qi)
        for (int qj = 0; qj < dim; ++qj) {
          auto& series = sampled_series[qi * dim + qj];
          series.name = "sampled(" + outcome_label(dim, qi) + "," + outcome_label(dim, qj) + ")";
          series.line = false;
          series.markers = true;
          chart.series.push_back(std::move(series));
        }
    }
    out.chart = std::move(chart);
  }
  return out;
}

CommandOutput run_deficit(const RunConfig& config) {
  if (!config.theta) throw std::invalid_argument("deficit: --theta is required");
  const DeficitReport report = info_deficit(config.n, config.s, *config.theta, config.mode);

  CommandOutput out;
  out.table.columns = {"theta", "n", "s", "h_step", "h_total", "deficit", "violated"};
  out.table.rows.push_back({report.theta, static_cast<double>(report.n), report.s, report.h_step,
                            report.h_total, report.deficit, report.violated ? 1.0 : 0.0});
  return out;
}

CommandOutput run_sweep(const RunConfig& config) {
  const std::vector<double> grid = config.grid_or_theta();
  CommandOutput out;
  out.table.columns = {"theta", "deficit", "violated"};
  if (config.shots) {
    out.table.columns.insert(out.table.columns.end(), {"mean", "std", "sigma"});
  }

  std::vector<std::uint64_t> seeds;
  if (config.shots) seeds = point_seeds(config.shots->seed, grid.size());

  SvgSeries theory{"D_n (theory)", {}, true, false};
  SvgSeries sampled{"D_n (sampled mean)", {}, false, true};

  for (std::size_t g = 0; g < grid.size(); ++g) {
    const DeficitReport report = info_deficit(config.n, config.s, grid[g], config.mode);
    std::vector<double> row{report.theta, report.deficit, report.violated ? 1.0 : 0.0};
    theory.points.emplace_back(report.theta, report.deficit);
    if (config.shots) {
      ShotConfig shot = *config.shots;
      shot.seed = seeds[g];
      const Estimate estimate = estimate_deficit(config.n, grid[g], shot, config.mode);
      row.insert(row.end(), {estimate.mean, estimate.std, sigma_violation(estimate)});
      sampled.points.emplace_back(report.theta, estimate.mean);
    }
    out.table.rows.push_back(std::move(row));
  }

  if (config.format == OutputFormat::kSvg) {
    SvgChart chart;
    chart.title = "information deficit D_" + std::to_string(config.n) + ", mode " +
                  elgi::to_string(config.mode);
    chart.x_label = "theta (rad)";
    chart.y_label = "D_n (bits / log2(2s+1))";
    chart.hlines.push_back(0.0);  // macrorealism bound
    chart.series.push_back(std::move(theory));
    if (config.shots) chart.series.push_back(std::move(sampled));
    out.chart = std::move(chart);
  }
  return out;
}

CommandOutput run_joint3(const RunConfig& config) {
  const std::vector<double> grid = config.grid_or_theta();
  const int dim = spin_dimension(config.s);

  CommandOutput out;
  out.table.columns.push_back("theta");
  for (int q1 = 0; q1 < dim; ++q1)
    for (int q2 = 0; q2 < dim; ++q2)
      for (int q3 = 0; q3 < dim; ++q3)
        out.table.columns.push_back("p" + outcome_label(dim, q1) + outcome_label(dim, q2) +
                                    outcome_label(dim, q3));
  const char* pair_names[] = {"12", "23", "13"};
  for (const char* pair : pair_names)
    for (int a = 0; a < dim; ++a)
      for (int b = 0; b < dim; ++b) {
        out.table.columns.push_back("p" + std::string(pair) + "_" + outcome_label(dim, a) +
                                    outcome_label(dim, b));
        out.table.columns.push_back("pp" + std::string(pair) + "_" + outcome_label(dim, a) +
                                    outcome_label(dim, b));
      }

  SvgSeries direct00{"P(0_1,0_3)", {}, true, false};
  SvgSeries marg00{"P'(0_1,0_3)", {}, true, false};
  SvgSeries direct01{"P(0_1,1_3)", {}, true, false};
  SvgSeries marg01{"P'(0_1,1_3)", {}, true, false};

  for (double theta : grid) {
    ProtocolConfig protocol{config.s, {0.0, theta, 2.0 * theta}, config.mode};
    const ProbTable three = joint3_circuit(protocol);
    const ProbTable direct[] = {joint2_for(config, theta), joint2_for(config, theta),
                                joint2_for(config, 2.0 * theta)};
    const ProbTable marginal[] = {marginalize(three, MarginalPair::k12),
                                  marginalize(three, MarginalPair::k23),
                                  marginalize(three, MarginalPair::k13)};

    std::vector<double> row{theta};
    for (double v : three.values()) row.push_back(v);
    for (int pair = 0; pair < 3; ++pair)
      for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b) {
          row.push_back(direct[pair].at(a, b));
          row.push_back(marginal[pair].at(a, b));
        }
    out.table.rows.push_back(std::move(row));

    direct00.points.emplace_back(theta, direct[2].at(0, 0));
    marg00.points.emplace_back(theta, marginal[2].at(0, 0));
    direct01.points.emplace_back(theta, direct[2].at(0, 1));
    marg01.points.emplace_back(theta, marginal[2].at(0, 1));
  }

  if (config.format == OutputFormat::kSvg) {
    SvgChart chart;
    chart.title = "pair (1,3): direct joint vs marginal of the three-time joint";
    chart.x_label = "step theta (rad)";
    chart.y_label = "probability";
    chart.series = {std::move(direct00), std::move(marg00), std::move(direct01), std::move(marg01)};
    out.chart = std::move(chart);
  }
  return out;
}

CommandOutput run_feasibility(const RunConfig& config) {
  const std::vector<double> grid = config.grid_or_theta();
  CommandOutput out;
  out.table.columns = {"theta", "feasible", "gap", "borderline"};

  SvgSeries gap_series{"residual gap", {}, true, false};
  SvgSeries verdict_series{"feasible (0/1)", {}, true, false};

  for (double theta : grid) {
    const FeasibilityResult result = grand_feasibility(quantum_marginal_set(config.s, theta));
    out.table.rows.push_back({theta, result.feasible ? 1.0 : 0.0, result.gap,
                              result.borderline ? 1.0 : 0.0});
    gap_series.points.emplace_back(theta, result.gap);
    verdict_series.points.emplace_back(theta, result.feasible ? 1.0 : 0.0);
  }

  if (config.format == OutputFormat::kSvg) {
    SvgChart chart;
    chart.title = "grand-distribution feasibility of equal-step quantum marginals";
    chart.x_label = "step theta (rad)";
    chart.y_label = "residual / verdict";
    chart.series = {std::move(gap_series), std::move(verdict_series)};
    out.chart = std::move(chart);
  }
  return out;
}

CommandOutput run_sample(const RunConfig& config) {
  const std::vector<double> grid = config.grid_or_theta();
  if (!config.shots) throw std::logic_error("sample: shot configuration missing");

  CommandOutput out;
  out.table.columns = {"theta", "shots", "reps", "eps", "mean", "std", "sigma"};
  const std::vector<std::uint64_t> seeds =
      grid.size() == 1 ? std::vector<std::uint64_t>{config.shots->seed}
                       : point_seeds(config.shots->seed, grid.size());

  for (std::size_t g = 0; g < grid.size(); ++g) {
    ShotConfig shot = *config.shots;
    shot.seed = seeds[g];
    const Estimate estimate = estimate_deficit(config.n, grid[g], shot, config.mode);
    out.table.rows.push_back({grid[g], static_cast<double>(shot.shots),
                              static_cast<double>(shot.reps), shot.readout_flip, estimate.mean,
                              estimate.std, sigma_violation(estimate)});
  }
  return out;
}

std::string render_output(const RunConfig& config) {
  CommandOutput output;
  switch (config.command) {
    case Command::kProbabilities: output = run_probabilities(config); break;
    case Command::kDeficit: output = run_deficit(config); break;
    case Command::kSweep: output = run_sweep(config); break;
    case Command::kJoint3: output = run_joint3(config); break;
    case Command::kFeasibility: output = run_feasibility(config); break;
    case Command::kSample: output = run_sample(config); break;
  }

  switch (config.format) {
    case OutputFormat::kCsv: return write_csv(output.table);
    case OutputFormat::kJson: return write_json(config, output.table);
    case OutputFormat::kSvg:
      if (!output.chart) {
        throw std::invalid_argument("command '" + to_string(config.command) +
                                    "' does not support svg output");
      }
      return render_svg(*output.chart);
  }
  throw std::logic_error("render_output: invalid format");
}

}  // namespace elgi::cli
