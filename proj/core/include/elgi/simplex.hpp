#ifndef ELGI_SIMPLEX_HPP
#define ELGI_SIMPLEX_HPP

#include <vector>

namespace elgi {

// Result of a phase-1 feasibility solve for {x >= 0 : A x = b}.
struct PhaseOneResult {
  // Minimum attainable sum of artificial variables (L1 residual of the best
  // phase-1 point); zero within tolerance means the system is feasible.
  double objective;
  // Structural variables at the phase-1 optimum.
  std::vector<double> x;
  int iterations;
};

// Phase-1 simplex with Bland's anti-cycling rule on the equality system
// A x = b, x >= 0. A is row-major, m rows by n columns. Redundant rows are
// tolerated (their artificials simply stay basic at zero).
PhaseOneResult phase_one_simplex(const std::vector<double>& a, int m, int n,
                                 const std::vector<double>& b);

}  // namespace elgi

#endif  // ELGI_SIMPLEX_HPP
