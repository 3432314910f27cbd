#ifndef ELGI_MACROREALISM_HPP
#define ELGI_MACROREALISM_HPP

#include <optional>
#include <vector>

#include "elgi/prob_table.hpp"

namespace elgi {

// The three pairwise distributions of a three-measurement run. All tables
// share outcome dimension d and have mass 1; the single-time marginals they
// induce must agree pairwise (checked by validate()).
struct MarginalSet {
  int d;
  ProbTable p12;
  ProbTable p23;
  ProbTable p13;

  // Throws std::invalid_argument when the shared single-time marginals
  // disagree beyond 1e-9.
  void validate() const;
};

// Equal-step quantum marginal set: P12 = P23 at rotation angle theta,
// P13 at 2*theta, for the maximally mixed spin-s state.
MarginalSet quantum_marginal_set(double s, double theta);

// Verdict of the grand-distribution feasibility problem.
struct FeasibilityResult {
  bool feasible;
  // True when the verdict sits within 10x of the residual tolerance of the
  // feasibility boundary; such points are reported feasible with a warning
  // rather than as a hard verdict.
  bool borderline;
  // Max constraint violation |A x - b| of the best phase-1 point. Zero (up
  // to roundoff) when feasible.
  double gap;
  // A grand distribution over d^3 outcomes reproducing all three marginals,
  // present when feasible.
  std::optional<ProbTable> witness;
};

// Decides whether some x >= 0 over d^3 outcomes with sum 1 marginalizes to
// all three pairwise tables, via phase-1 simplex with Bland's rule at 1e-9
// residual tolerance.
FeasibilityResult grand_feasibility(const MarginalSet& marginals);

// Classical macrorealist baseline: a Markov chain with uniform initial
// distribution stepped through a row-stochastic transition matrix.
struct MarkovBaseline {
  ProbTable grand;                      // arity n_steps+1
  std::optional<MarginalSet> marginals; // derived pairwise tables (n_steps=2)
};

// transition is row-major d x d; rows must sum to 1 within 1e-9. Supports
// n_steps in {1, 2} (the grand table is a ProbTable of arity 2 or 3).
MarkovBaseline markov_baseline(int d, const std::vector<double>& transition, int n_steps);

struct MismatchPoint {
  double theta;
  double delta;  // P'(0_1,0_3) - P(0_1,0_3)
};

// Mismatch between the (1,3) marginal of the three-time table and the direct
// two-time table, for equal steps theta (spin 1/2).
std::vector<MismatchPoint> mismatch_curve(const std::vector<double>& theta_grid);

}  // namespace elgi

#endif  // ELGI_MACROREALISM_HPP
