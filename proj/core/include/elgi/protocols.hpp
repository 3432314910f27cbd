#ifndef ELGI_PROTOCOLS_HPP
#define ELGI_PROTOCOLS_HPP

#include <string>
#include <vector>

#include "elgi/prob_table.hpp"
#include "elgi/qcore.hpp"

namespace elgi {

// How a joint probability is extracted.
//   kCnot     - single run, ancilla copies the outcome through a CNOT
//   kAntiCnot - single run, ancilla flips on |0> instead of |1>
//   kInrm     - ideal negative result measurement: combine the unflipped
//               branches of a CNOT run and an anti-CNOT run, discarding the
//               branches where the ancilla interacted
//   kAnalytic - closed-form transition probabilities, any spin s
enum class MeasurementMode { kCnot, kAntiCnot, kInrm, kAnalytic };

std::string to_string(MeasurementMode mode);
MeasurementMode mode_from_string(const std::string& name);

// Measurement schedule: angles[k] = omega * t_k is the rotation accumulated
// by time t_k. Angles must be strictly increasing.
struct ProtocolConfig {
  double s = 0.5;
  std::vector<double> angles;
  MeasurementMode mode = MeasurementMode::kAnalytic;

  void validate() const;
};

enum class CnotPolarity { kOnOne, kOnZero };

// 4x4 permutation unitary on (system, ancilla); kOnOne is the standard CNOT,
// kOnZero the anti-CNOT that flips the ancilla when the system is |0>.
ComplexMatrix cnot(CnotPolarity polarity);

// Single-event probabilities P(q_i): back-evolve by U_i^dagger, dephase and
// read the diagonal. No forward evolution after the final measurement.
ProbTable sep_probabilities(const DensityMatrix& rho_s, double theta_i);

// Probability-encoding check: builds rho_s (x) |0><0|, applies CNOT, traces
// out the system and reads the ancilla diagonal, which must reproduce the
// diagonal of rho_s.
ProbTable encode_check(const DensityMatrix& rho_s);

// Two-time joint probabilities P(q_i, q_j) from the two-qubit circuit, for
// the maximally mixed system state. Requires s = 1/2 for circuit modes;
// kAnalytic dispatches to analytic_joint2.
ProbTable joint2_circuit(const ProtocolConfig& config, int i, int j);

// Three-time joint probabilities P(q_1, q_2, q_3) from the three-qubit
// circuit (system plus two ancillas). Requires s = 1/2 and three angles.
ProbTable joint3_circuit(const ProtocolConfig& config);

// Closed form P(m_i, m_j) = |<m_j| U(theta_ij) |m_i>|^2 / (2s+1) for the
// maximally mixed spin-s state.
ProbTable analytic_joint2(double s, double theta_ij);

// Projective-collapse chain
// P(q1,q2,q3) = |<q2|U(t2-t1)|q1>|^2 |<q3|U(t3-t2)|q2>|^2 / (2s+1).
ProbTable analytic_joint3(double s, double theta1, double theta2, double theta3);

enum class MarginalPair { k12, k23, k13 };

// Sums the excluded time index out of an arity-3 table; mass is preserved.
ProbTable marginalize(const ProbTable& table, MarginalPair pair);

}  // namespace elgi

#endif  // ELGI_PROTOCOLS_HPP
