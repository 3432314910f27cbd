#include "elgi/simplex.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace elgi {

namespace {
constexpr double kPivotTol = 1e-12;
}

PhaseOneResult phase_one_simplex(const std::vector<double>& a, int m, int n,
                                 const std::vector<double>& b) {
  if (static_cast<int>(a.size()) != m * n || static_cast<int>(b.size()) != m) {
    throw std::invalid_argument("phase_one_simplex: shape mismatch");
  }

  // Tableau layout: m constraint rows + objective row; columns are the n
  // structural variables, m artificials, and the rhs.
  const int cols = n + m + 1;
  const int rhs = n + m;
  std::vector<double> t(static_cast<std::size_t>(m + 1) * cols, 0.0);
  auto cell = [&](int r, int c) -> double& { return t[static_cast<std::size_t>(r) * cols + c]; };

  for (int r = 0; r < m; ++r) {
    const double sign = b[r] < 0.0 ? -1.0 : 1.0;
    for (int c = 0; c < n; ++c) cell(r, c) = sign * a[static_cast<std::size_t>(r) * n + c];
    cell(r, n + r) = 1.0;
    cell(r, rhs) = sign * b[r];
  }

  // Phase-1 objective: minimize the artificial sum. With the artificial
  // basis, reduced costs of structural columns are -(column sums).
  std::vector<int> basis(m);
  for (int r = 0; r < m; ++r) {
    basis[r] = n + r;
    for (int c = 0; c < n; ++c) cell(m, c) -= cell(r, c);
    cell(m, rhs) -= cell(r, rhs);
  }

  const int max_iterations = 2000 * (m + n);
  int iterations = 0;
  while (true) {
    if (++iterations > max_iterations) {
      throw std::runtime_error("phase_one_simplex: iteration limit exceeded");
    }

    // Bland's rule: entering variable is the lowest-index column with a
    // negative reduced cost.
    int enter = -1;
    for (int c = 0; c < n + m; ++c) {
      if (cell(m, c) < -kPivotTol) {
        enter = c;
        break;
      }
    }
    if (enter < 0) break;

    // Ratio test; ties broken by the smallest basis index (Bland).
    int leave = -1;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (int r = 0; r < m; ++r) {
      if (cell(r, enter) <= kPivotTol) continue;
      const double ratio = cell(r, rhs) / cell(r, enter);
      if (ratio < best_ratio - kPivotTol ||
          (std::abs(ratio - best_ratio) <= kPivotTol && (leave < 0 || basis[r] < basis[leave]))) {
        best_ratio = ratio;
        leave = r;
      }
    }
    if (leave < 0) {
      // Phase-1 objective is bounded below by zero, so an unbounded ray
      // cannot occur with exact arithmetic; treat as numerical failure.
      throw std::runtime_error("phase_one_simplex: unbounded pivot column");
    }

    const double pivot = cell(leave, enter);
    for (int c = 0; c < cols; ++c) cell(leave, c) /= pivot;
    for (int r = 0; r <= m; ++r) {
      if (r == leave) continue;
      const double factor = cell(r, enter);
      if (factor == 0.0) continue;
      for (int c = 0; c < cols; ++c) cell(r, c) -= factor * cell(leave, c);
    }
    basis[leave] = enter;
  }

  PhaseOneResult result;
  result.objective = -cell(m, rhs);
  result.iterations = iterations;
  result.x.assign(n, 0.0);
  for (int r = 0; r < m; ++r) {
    if (basis[r] < n) result.x[basis[r]] = cell(r, rhs);
  }
  return result;
}

}  // namespace elgi
