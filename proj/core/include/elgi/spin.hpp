#ifndef ELGI_SPIN_HPP
#define ELGI_SPIN_HPP

#include "elgi/complex_matrix.hpp"

namespace elgi {

// Spin angular-momentum components for spin s, in units of hbar = 1.
// Basis ordering: |0> is the m = +s eigenstate of sz, descending to m = -s,
// so sz is real diagonal with entries s, s-1, ..., -s.
struct SpinOps {
  double s;
  ComplexMatrix sx;
  ComplexMatrix sy;
  ComplexMatrix sz;
};

// Dimension 2s+1 of the spin-s representation. Rejects s <= 0 and
// non-half-integer s.
int spin_dimension(double s);

// Ladder-operator construction: sx = (S+ + S-)/2, sy = (S+ - S-)/(2i).
SpinOps spin_operators(double s);

// Forward evolution U(theta) = exp(i theta S_x), i.e. the propagator of the
// Hamiltonian H = -omega S_x over theta = omega t. Unitary within 1e-10.
ComplexMatrix rotation_unitary(double s, double theta);

}  // namespace elgi

#endif  // ELGI_SPIN_HPP
