#include "elgi/entropy.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace elgi {

namespace {

constexpr double kViolationTol = 1e-9;

// -sum p log2 p over raw values, clamping entries in [-1e-9, 0) to zero.
double entropy_of_values(const std::vector<double>& values) {
  double h = 0.0;
  for (double p : values) {
    if (p < -1e-9) {
      throw std::domain_error("entropy: negative probability " + std::to_string(p));
    }
    if (p <= 0.0) continue;
    h -= p * std::log2(p);
  }
  return h;
}

void require_unit_mass(const ProbTable& p, const char* what) {
  if (std::abs(p.mass() - 1.0) > 1e-9 || std::abs(p.sum() - 1.0) > 1e-9) {
    throw std::invalid_argument(std::string(what) + ": table mass must be 1");
  }
}

}  // namespace

double shannon(const ProbTable& p) {
  if (p.arity() != 1) throw std::invalid_argument("shannon: arity-1 table required");
  require_unit_mass(p, "shannon");
  return entropy_of_values(p.values());
}

double joint_entropy(const ProbTable& p) {
  if (p.arity() != 2) throw std::invalid_argument("joint_entropy: arity-2 table required");
  require_unit_mass(p, "joint_entropy");
  return entropy_of_values(p.values());
}

double conditional_entropy(const ProbTable& p) {
  if (p.arity() != 2) throw std::invalid_argument("conditional_entropy: arity-2 table required");
  require_unit_mass(p, "conditional_entropy");
  const double h = joint_entropy(p) - shannon(marginal_first(p));
  // Conditional entropies are nonnegative for legitimate tables; clamp the
  // rounding residue.
  return h < 0.0 && h > -1e-9 ? 0.0 : h;
}

BcChainCheck bc_chain_check(const ProbTable& p) {
  const double h_cond = conditional_entropy(p);
  const double h_single = shannon(marginal_second(p));
  const double h_joint = joint_entropy(p);
  return BcChainCheck{h_cond <= h_single + 1e-9, h_single <= h_joint + 1e-9};
}

DeficitReport info_deficit(int n, double s, double theta, MeasurementMode mode) {
  if (n < 3) throw std::invalid_argument("info_deficit: n >= 3 measurements required");
  if (mode != MeasurementMode::kAnalytic && (n != 3 || s != 0.5)) {
    throw std::invalid_argument("info_deficit: circuit modes support n = 3, s = 1/2 only");
  }

  const double step = theta / (n - 1);
  auto joint_for = [&](double start, double angle) {
    if (mode == MeasurementMode::kAnalytic) return analytic_joint2(s, angle);
    ProtocolConfig config{s, {start, start + angle}, mode};
    return joint2_circuit(config, 0, 1);
  };

  const double h_step = conditional_entropy(joint_for(0.0, step));
  const double h_total = conditional_entropy(joint_for(0.0, theta));
  const double deficit = ((n - 1) * h_step - h_total) / std::log2(2.0 * s + 1.0);

  return DeficitReport{n, s, theta, h_step, h_total, deficit, deficit < -kViolationTol, mode};
}

std::vector<DeficitReport> deficit_sweep(int n, double s, const std::vector<double>& theta_grid,
                                         MeasurementMode mode) {
  if (theta_grid.empty()) throw std::invalid_argument("deficit_sweep: empty grid");
  std::vector<DeficitReport> reports;
  reports.reserve(theta_grid.size());
  for (double theta : theta_grid) reports.push_back(info_deficit(n, s, theta, mode));
  return reports;
}

}  // namespace elgi
