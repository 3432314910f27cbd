#include "elgi/macrorealism.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "elgi/protocols.hpp"
#include "elgi/simplex.hpp"

namespace elgi {

namespace {
constexpr double kMarginalTol = 1e-9;
constexpr double kFeasTol = 1e-9;
constexpr double kWitnessTol = 1e-7;
}  // namespace

void MarginalSet::validate() const {
  if (p12.arity() != 2 || p23.arity() != 2 || p13.arity() != 2) {
    throw std::invalid_argument("MarginalSet: all tables must have arity 2");
  }
  if (p12.outcome_dim() != d || p23.outcome_dim() != d || p13.outcome_dim() != d) {
    throw std::invalid_argument("MarginalSet: outcome dimension mismatch");
  }
  const ProbTable q1_from_12 = marginal_first(p12);
  const ProbTable q1_from_13 = marginal_first(p13);
  const ProbTable q2_from_12 = marginal_second(p12);
  const ProbTable q2_from_23 = marginal_first(p23);
  const ProbTable q3_from_23 = marginal_second(p23);
  const ProbTable q3_from_13 = marginal_second(p13);
  for (int q = 0; q < d; ++q) {
    if (std::abs(q1_from_12.at(q) - q1_from_13.at(q)) > kMarginalTol ||
        std::abs(q2_from_12.at(q) - q2_from_23.at(q)) > kMarginalTol ||
        std::abs(q3_from_23.at(q) - q3_from_13.at(q)) > kMarginalTol) {
      throw std::invalid_argument("MarginalSet: inconsistent single-time marginals");
    }
  }
}

MarginalSet quantum_marginal_set(double s, double theta) {
  ProbTable step = analytic_joint2(s, theta);
  ProbTable total = analytic_joint2(s, 2.0 * theta);
  const int d = step.outcome_dim();
  return MarginalSet{d, step, step, std::move(total)};
}

FeasibilityResult grand_feasibility(const MarginalSet& marginals) {
  marginals.validate();
  const int d = marginals.d;
  const int n_vars = d * d * d;
  const int n_rows = 1 + 3 * d * d;

  auto var = [d](int q1, int q2, int q3) { return (q1 * d + q2) * d + q3; };

  std::vector<double> a(static_cast<std::size_t>(n_rows) * n_vars, 0.0);
  std::vector<double> b(n_rows, 0.0);
  auto row = [&](int r) { return a.begin() + static_cast<std::size_t>(r) * n_vars; };

  int r = 0;
  for (int v = 0; v < n_vars; ++v) row(r)[v] = 1.0;
  b[r++] = 1.0;
  for (int q1 = 0; q1 < d; ++q1)
    for (int q2 = 0; q2 < d; ++q2) {
      for (int q3 = 0; q3 < d; ++q3) row(r)[var(q1, q2, q3)] = 1.0;
      b[r++] = marginals.p12.at(q1, q2);
    }
  for (int q2 = 0; q2 < d; ++q2)
    for (int q3 = 0; q3 < d; ++q3) {
      for (int q1 = 0; q1 < d; ++q1) row(r)[var(q1, q2, q3)] = 1.0;
      b[r++] = marginals.p23.at(q2, q3);
    }
  for (int q1 = 0; q1 < d; ++q1)
    for (int q3 = 0; q3 < d; ++q3) {
      for (int q2 = 0; q2 < d; ++q2) row(r)[var(q1, q2, q3)] = 1.0;
      b[r++] = marginals.p13.at(q1, q3);
    }

  const PhaseOneResult lp = phase_one_simplex(a, n_rows, n_vars, b);

  // Residual of the returned point against the original system.
  double gap = 0.0;
  for (int i = 0; i < n_rows; ++i) {
    double dot = 0.0;
    for (int v = 0; v < n_vars; ++v) dot += a[static_cast<std::size_t>(i) * n_vars + v] * lp.x[v];
    gap = std::max(gap, std::abs(dot - b[i]));
  }

  FeasibilityResult result;
  result.gap = gap;
  result.feasible = gap <= 10.0 * kFeasTol;
  result.borderline = gap > kFeasTol && gap <= 10.0 * kFeasTol;
  if (result.feasible) {
    ProbTable witness(3, d, 1.0);
    witness.values() = lp.x;
    for (auto& v : witness.values()) {
      if (v < 0.0 && v >= -1e-9) v = 0.0;
    }
    // Declared mass tracks the phase-1 point exactly so that borderline
    // residuals (up to 10x the feasibility tolerance) stay representable.
    witness.set_mass(witness.sum());
    witness.validate();
    // The witness must actually reproduce the inputs.
    const ProbTable w12 = marginalize(witness, MarginalPair::k12);
    const ProbTable w23 = marginalize(witness, MarginalPair::k23);
    const ProbTable w13 = marginalize(witness, MarginalPair::k13);
    for (int x = 0; x < d; ++x)
      for (int y = 0; y < d; ++y) {
        if (std::abs(w12.at(x, y) - marginals.p12.at(x, y)) > kWitnessTol ||
            std::abs(w23.at(x, y) - marginals.p23.at(x, y)) > kWitnessTol ||
            std::abs(w13.at(x, y) - marginals.p13.at(x, y)) > kWitnessTol) {
          throw std::runtime_error("grand_feasibility: witness fails to reproduce marginals");
        }
      }
    result.witness = std::move(witness);
  }
  return result;
}

MarkovBaseline markov_baseline(int d, const std::vector<double>& transition, int n_steps) {
  if (d < 2) throw std::invalid_argument("markov_baseline: d >= 2 required");
  if (static_cast<int>(transition.size()) != d * d) {
    throw std::invalid_argument("markov_baseline: transition must be d x d row-major");
  }
  if (n_steps != 1 && n_steps != 2) {
    throw std::invalid_argument("markov_baseline: n_steps must be 1 or 2");
  }
  for (int i = 0; i < d; ++i) {
    double row_sum = 0.0;
    for (int j = 0; j < d; ++j) {
      const double t = transition[static_cast<std::size_t>(i) * d + j];
      if (t < -1e-12) throw std::invalid_argument("markov_baseline: negative transition entry");
      row_sum += t;
    }
    if (std::abs(row_sum - 1.0) > 1e-9) {
      throw std::invalid_argument("markov_baseline: row " + std::to_string(i) +
                                  " of transition does not sum to 1");
    }
  }

  auto t = [&](int from, int to) { return transition[static_cast<std::size_t>(from) * d + to]; };

  MarkovBaseline baseline{ProbTable(n_steps + 1, d, 1.0), std::nullopt};
  if (n_steps == 1) {
    for (int q1 = 0; q1 < d; ++q1)
      for (int q2 = 0; q2 < d; ++q2) baseline.grand.at(q1, q2) = t(q1, q2) / d;
  } else {
    for (int q1 = 0; q1 < d; ++q1)
      for (int q2 = 0; q2 < d; ++q2)
        for (int q3 = 0; q3 < d; ++q3) baseline.grand.at(q1, q2, q3) = t(q1, q2) * t(q2, q3) / d;
    baseline.marginals = MarginalSet{d, marginalize(baseline.grand, MarginalPair::k12),
                                     marginalize(baseline.grand, MarginalPair::k23),
                                     marginalize(baseline.grand, MarginalPair::k13)};
    baseline.marginals->validate();
  }
  baseline.grand.validate();
  return baseline;
}

std::vector<MismatchPoint> mismatch_curve(const std::vector<double>& theta_grid) {
  std::vector<MismatchPoint> points;
  points.reserve(theta_grid.size());
  for (double theta : theta_grid) {
    const ProbTable three = analytic_joint3(0.5, 0.0, theta, 2.0 * theta);
    const ProbTable mp13 = marginalize(three, MarginalPair::k13);
    const ProbTable direct = analytic_joint2(0.5, 2.0 * theta);
    points.push_back({theta, mp13.at(0, 0) - direct.at(0, 0)});
  }
  return points;
}

}  // namespace elgi
