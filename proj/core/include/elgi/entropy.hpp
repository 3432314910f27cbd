#ifndef ELGI_ENTROPY_HPP
#define ELGI_ENTROPY_HPP

#include <vector>

#include "elgi/prob_table.hpp"
#include "elgi/protocols.hpp"

namespace elgi {

// Entropies are in bits (log base 2) throughout.

// Shannon entropy -sum p log2 p of an arity-1 table with mass 1, using the
// continuity extension 0 log 0 = 0.
double shannon(const ProbTable& p);

// Joint Shannon entropy of an arity-2 table with mass 1.
double joint_entropy(const ProbTable& p);

// Mean conditional entropy H(Q_j | Q_i) = H(Q_i, Q_j) - H(Q_i), where Q_i is
// the first index of the table.
double conditional_entropy(const ProbTable& p);

// Braunstein-Caves chain H(Q_j|Q_i) <= H(Q_j) <= H(Q_i,Q_j), each inequality
// checked within 1e-9.
struct BcChainCheck {
  bool conditional_le_single;
  bool single_le_joint;
  bool holds() const { return conditional_le_single && single_le_joint; }
};

BcChainCheck bc_chain_check(const ProbTable& p);

// Information deficit for n equidistant measurements of total angle theta,
// D_n = [(n-1) H(step) - H(total)] / log2(2s+1), with H(.) the conditional
// entropy between the endpoints of the given rotation angle.
struct DeficitReport {
  int n;
  double s;
  double theta;
  double h_step;
  double h_total;
  double deficit;
  bool violated;
  MeasurementMode mode;
};

// Circuit modes support s = 1/2 and n = 3 only; analytic mode any spin and
// n >= 3. A deficit below -1e-9 is flagged as a macrorealism violation.
DeficitReport info_deficit(int n, double s, double theta, MeasurementMode mode);

std::vector<DeficitReport> deficit_sweep(int n, double s, const std::vector<double>& theta_grid,
                                         MeasurementMode mode);

}  // namespace elgi

#endif  // ELGI_ENTROPY_HPP
