#include "elgi/protocols.hpp"

#include <cmath>
#include <stdexcept>

#include "elgi/spin.hpp"

namespace elgi {

std::string to_string(MeasurementMode mode) {
  switch (mode) {
    case MeasurementMode::kCnot: return "cnot";
    case MeasurementMode::kAntiCnot: return "anticnot";
    case MeasurementMode::kInrm: return "inrm";
    case MeasurementMode::kAnalytic: return "analytic";
  }
  throw std::invalid_argument("to_string: invalid MeasurementMode");
}

MeasurementMode mode_from_string(const std::string& name) {
  if (name == "cnot") return MeasurementMode::kCnot;
  if (name == "anticnot") return MeasurementMode::kAntiCnot;
  if (name == "inrm") return MeasurementMode::kInrm;
  if (name == "analytic") return MeasurementMode::kAnalytic;
  throw std::invalid_argument("unknown measurement mode '" + name + "'");
}

void ProtocolConfig::validate() const {
  spin_dimension(s);
  // Equal consecutive angles are allowed: they model the zero-rotation limit
  // between measurements (omega -> 0), which several protocols exercise.
  for (std::size_t k = 1; k < angles.size(); ++k) {
    if (!(angles[k] >= angles[k - 1])) {
      throw std::invalid_argument("ProtocolConfig: angles must be non-decreasing");
    }
  }
}

ComplexMatrix cnot(CnotPolarity polarity) {
  // Basis |system, ancilla> with the system as the leftmost factor.
  ComplexMatrix gate(4, 4);
  const int flip_on = polarity == CnotPolarity::kOnOne ? 1 : 0;
  for (int sys = 0; sys < 2; ++sys) {
    for (int anc = 0; anc < 2; ++anc) {
      const int out_anc = sys == flip_on ? 1 - anc : anc;
      gate.at(sys * 2 + out_anc, sys * 2 + anc) = 1.0;
    }
  }
  return gate;
}

ProbTable sep_probabilities(const DensityMatrix& rho_s, double theta_i) {
  const double s = (rho_s.dim() - 1) / 2.0;
  const ComplexMatrix u_back = rotation_unitary(s, -theta_i);
  return diag_probabilities(dephase(evolve(rho_s, u_back)));
}

ProbTable encode_check(const DensityMatrix& rho_s) {
  if (rho_s.dim() != 2) throw std::invalid_argument("encode_check: system must be a qubit");
  DensityMatrix joint = DensityMatrix::from_matrix(
      kron(rho_s.matrix(), DensityMatrix::basis_state(2, 0).matrix()), rho_s.mass());
  joint = evolve(joint, cnot(CnotPolarity::kOnOne));
  const DensityMatrix ancilla = partial_trace(joint, {2, 2}, {1});
  return diag_probabilities(dephase(ancilla));
}

namespace {

// Runs the Fig. 1(b)-style circuit with the given encoding gate and returns
// the dephased 4-outcome diagonal, indexed as diag[2*q_sys + q_anc].
std::vector<double> joint2_diagonal(double theta_i, double theta_ij, const ComplexMatrix& gate) {
  const ComplexMatrix i2 = ComplexMatrix::identity(2);
  DensityMatrix rho = DensityMatrix::from_matrix(
      kron(DensityMatrix::maximally_mixed(2).matrix(), DensityMatrix::basis_state(2, 0).matrix()),
      1.0);
  rho = evolve(rho, kron(rotation_unitary(0.5, -theta_i), i2));
  rho = evolve(rho, gate);
  // Forward evolution U_i followed by back evolution U_j^dagger, composed as
  // the net propagator exp(-i theta_ij S_x) on the system.
  rho = evolve(rho, kron(rotation_unitary(0.5, -theta_ij), i2));
  rho = dephase(rho);
  const ProbTable diag = diag_probabilities(rho);
  return diag.values();
}

ProbTable assemble_joint2(MeasurementMode mode, double theta_i, double theta_ij) {
  ProbTable table(2, 2, 1.0);
  switch (mode) {
    case MeasurementMode::kCnot: {
      const auto d = joint2_diagonal(theta_i, theta_ij, cnot(CnotPolarity::kOnOne));
      // Ancilla copies q_i: P(q_i = a, q_j = q) = diag[2q + a].
      for (int qi = 0; qi < 2; ++qi)
        for (int qj = 0; qj < 2; ++qj) table.at(qi, qj) = d[2 * qj + qi];
      break;
    }
    case MeasurementMode::kAntiCnot: {
      const auto d = joint2_diagonal(theta_i, theta_ij, cnot(CnotPolarity::kOnZero));
      // Ancilla flips on |0>: flipped ancilla (a=1) marks q_i = 0.
      for (int qi = 0; qi < 2; ++qi)
        for (int qj = 0; qj < 2; ++qj) table.at(qi, qj) = d[2 * qj + (1 - qi)];
      break;
    }
    case MeasurementMode::kInrm: {
      const auto dc = joint2_diagonal(theta_i, theta_ij, cnot(CnotPolarity::kOnOne));
      const auto da = joint2_diagonal(theta_i, theta_ij, cnot(CnotPolarity::kOnZero));
      // Keep only the unflipped-ancilla (a=0) branch of each run; the two
      // kept branches are complementary, so the assembled mass is 1.
      for (int qj = 0; qj < 2; ++qj) {
        table.at(0, qj) = dc[2 * qj];
        table.at(1, qj) = da[2 * qj];
      }
      break;
    }
    case MeasurementMode::kAnalytic:
      throw std::logic_error("assemble_joint2: analytic mode handled by caller");
  }
  table.validate();
  return table;
}

}  // namespace

ProbTable joint2_circuit(const ProtocolConfig& config, int i, int j) {
  config.validate();
  if (i < 0 || j < 0 || i >= static_cast<int>(config.angles.size()) ||
      j >= static_cast<int>(config.angles.size()) || i >= j) {
    throw std::invalid_argument("joint2_circuit: time indices must satisfy 0 <= i < j < angle count");
  }
  const double theta_i = config.angles[i];
  const double theta_ij = config.angles[j] - config.angles[i];
  if (config.mode == MeasurementMode::kAnalytic) {
    return analytic_joint2(config.s, theta_ij);
  }
  if (config.s != 0.5) {
    throw std::invalid_argument("joint2_circuit: circuit modes require s = 1/2");
  }
  return assemble_joint2(config.mode, theta_i, theta_ij);
}

ProbTable joint3_circuit(const ProtocolConfig& config) {
  config.validate();
  if (config.angles.size() != 3) {
    throw std::invalid_argument("joint3_circuit: exactly three measurement angles required");
  }
  if (config.mode == MeasurementMode::kAnalytic) {
    return analytic_joint3(config.s, config.angles[0], config.angles[1], config.angles[2]);
  }
  if (config.s != 0.5) {
    throw std::invalid_argument("joint3_circuit: circuit modes require s = 1/2");
  }

  const double t1 = config.angles[0];
  const double step12 = config.angles[1] - config.angles[0];
  const double step23 = config.angles[2] - config.angles[1];

  const ComplexMatrix i2 = ComplexMatrix::identity(2);
  auto on_system = [&](const ComplexMatrix& u) { return kron(kron(u, i2), i2); };

  // CNOT from the system (qubit 0) onto ancilla 2 (qubit 2).
  ComplexMatrix cnot_sys_anc2(8, 8);
  for (int b = 0; b < 8; ++b) {
    const int sys = (b >> 2) & 1, a1 = (b >> 1) & 1, a2 = b & 1;
    const int out = (sys << 2) | (a1 << 1) | (sys == 1 ? 1 - a2 : a2);
    cnot_sys_anc2.at(out, b) = 1.0;
  }

  DensityMatrix rho = DensityMatrix::from_matrix(
      kron(kron(DensityMatrix::maximally_mixed(2).matrix(),
                DensityMatrix::basis_state(2, 0).matrix()),
           DensityMatrix::basis_state(2, 0).matrix()),
      1.0);
  rho = evolve(rho, on_system(rotation_unitary(0.5, -t1)));
  rho = evolve(rho, kron(cnot(CnotPolarity::kOnOne), i2));
  rho = evolve(rho, on_system(rotation_unitary(0.5, -step12)));
  rho = evolve(rho, cnot_sys_anc2);
  rho = evolve(rho, on_system(rotation_unitary(0.5, -step23)));
  rho = dephase(rho);

  const ProbTable diag = diag_probabilities(rho);
  // Ancilla 1 holds q1, ancilla 2 holds q2, the system ends as q3.
  ProbTable table(3, 2, 1.0);
  for (int q1 = 0; q1 < 2; ++q1)
    for (int q2 = 0; q2 < 2; ++q2)
      for (int q3 = 0; q3 < 2; ++q3) table.at(q1, q2, q3) = diag.values()[(q3 << 2) | (q1 << 1) | q2];
  table.validate();
  return table;
}

ProbTable analytic_joint2(double s, double theta_ij) {
  const int dim = spin_dimension(s);
  const ComplexMatrix u = rotation_unitary(s, theta_ij);
  ProbTable table(2, dim, 1.0);
  for (int qi = 0; qi < dim; ++qi)
    for (int qj = 0; qj < dim; ++qj) table.at(qi, qj) = std::norm(u.at(qj, qi)) / dim;
  table.validate();
  return table;
}

ProbTable analytic_joint3(double s, double theta1, double theta2, double theta3) {
  const int dim = spin_dimension(s);
  const ComplexMatrix u12 = rotation_unitary(s, theta2 - theta1);
  const ComplexMatrix u23 = rotation_unitary(s, theta3 - theta2);
  ProbTable table(3, dim, 1.0);
  for (int q1 = 0; q1 < dim; ++q1)
    for (int q2 = 0; q2 < dim; ++q2)
      for (int q3 = 0; q3 < dim; ++q3)
        table.at(q1, q2, q3) = std::norm(u12.at(q2, q1)) * std::norm(u23.at(q3, q2)) / dim;
  table.validate();
  return table;
}

ProbTable marginalize(const ProbTable& table, MarginalPair pair) {
  if (table.arity() != 3) throw std::invalid_argument("marginalize: arity-3 table required");
  const int d = table.outcome_dim();
  ProbTable out(2, d, table.mass());
  for (int q1 = 0; q1 < d; ++q1)
    for (int q2 = 0; q2 < d; ++q2)
      for (int q3 = 0; q3 < d; ++q3) {
        switch (pair) {
          case MarginalPair::k12: out.at(q1, q2) += table.at(q1, q2, q3); break;
          case MarginalPair::k23: out.at(q2, q3) += table.at(q1, q2, q3); break;
          case MarginalPair::k13: out.at(q1, q3) += table.at(q1, q2, q3); break;
        }
      }
  out.validate();
  return out;
}

}  // namespace elgi
