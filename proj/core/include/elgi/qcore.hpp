#ifndef ELGI_QCORE_HPP
#define ELGI_QCORE_HPP

#include <vector>

#include "elgi/complex_matrix.hpp"
#include "elgi/prob_table.hpp"

namespace elgi {

// Validation tolerances for quantum states.
inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kTraceTol = 1e-10;
inline constexpr double kPsdEigTol = 1e-9;

// Hermitian, PSD complex matrix with declared trace `mass` (1.0 for proper
// states, the branch probability for postselected branches). Construction
// validates all three invariants; instances are immutable afterwards.
class DensityMatrix {
 public:
  // Validates Hermiticity (1e-10), trace against `expected_mass` (1e-10) and
  // positive semidefiniteness (eigenvalues >= -1e-9).
  static DensityMatrix from_matrix(ComplexMatrix m, double expected_mass = 1.0);

  static DensityMatrix maximally_mixed(int dim);
  static DensityMatrix basis_state(int dim, int index);

  int dim() const { return matrix_.rows(); }
  double mass() const { return mass_; }
  const ComplexMatrix& matrix() const { return matrix_; }

 private:
  DensityMatrix(ComplexMatrix m, double mass) : matrix_(std::move(m)), mass_(mass) {}
  ComplexMatrix matrix_;
  double mass_;
};

// Unitary conjugation U rho U^dagger.
DensityMatrix evolve(const DensityMatrix& rho, const ComplexMatrix& u);

// Reduced state over the `keep` subsystems. `dims` lists the subsystem
// dimensions whose product must equal rho.dim(); `keep` holds subsystem
// indices (ascending order of significance, leftmost factor = index 0).
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& dims,
                            const std::vector<int>& keep);

// Zeroes every off-diagonal entry; models pulsed-field-gradient dephasing
// followed by a diagonal-tomography readout.
DensityMatrix dephase(const DensityMatrix& rho);

// Pi rho Pi without renormalization; the result's mass is the branch
// probability. The projector must be idempotent within 1e-10.
DensityMatrix project_branch(const DensityMatrix& rho, const ComplexMatrix& projector);

// Real parts of the diagonal as an arity-1 table with mass = rho.mass().
// Entries in [-1e-9, 0) are clamped; anything below -1e-6 signals an
// upstream bug and throws.
ProbTable diag_probabilities(const DensityMatrix& rho);

}  // namespace elgi

#endif  // ELGI_QCORE_HPP
