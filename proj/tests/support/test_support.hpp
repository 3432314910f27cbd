#ifndef ELGI_TESTS_SUPPORT_HPP
#define ELGI_TESTS_SUPPORT_HPP

#include <cmath>
#include <complex>
#include <random>

#include "elgi/complex_matrix.hpp"
#include "elgi/qcore.hpp"

namespace elgi::test {

// Term-by-term Taylor summation of exp(A), independent of the
// scaling-and-squaring path in the library. Converges fine for the small
// norms used in tests.
inline ComplexMatrix series_exponential(const ComplexMatrix& a, double term_tol = 1e-20) {
  ComplexMatrix result = ComplexMatrix::identity(a.rows());
  ComplexMatrix term = ComplexMatrix::identity(a.rows());
  for (int k = 1; k <= 200; ++k) {
    term = term * a;
    term *= cplx(1.0 / k, 0.0);
    result += term;
    if (max_abs(term) < term_tol) break;
  }
  return result;
}

// Closed-form single-qubit rotation exp(i theta S_x).
inline ComplexMatrix qubit_rotation(double theta) {
  ComplexMatrix u(2, 2);
  u.at(0, 0) = std::cos(theta / 2.0);
  u.at(0, 1) = cplx(0.0, std::sin(theta / 2.0));
  u.at(1, 0) = cplx(0.0, std::sin(theta / 2.0));
  u.at(1, 1) = std::cos(theta / 2.0);
  return u;
}

// Random single-qubit state from a Bloch vector of length <= 1.
inline DensityMatrix random_qubit_state(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  double x, y, z;
  do {
    x = unit(rng);
    y = unit(rng);
    z = unit(rng);
  } while (x * x + y * y + z * z > 1.0);
  ComplexMatrix m(2, 2);
  m.at(0, 0) = 0.5 * (1.0 + z);
  m.at(1, 1) = 0.5 * (1.0 - z);
  m.at(0, 1) = 0.5 * cplx(x, -y);
  m.at(1, 0) = 0.5 * cplx(x, y);
  return DensityMatrix::from_matrix(std::move(m));
}

// Random PSD unit-trace matrix: A A^dagger from a random complex square A,
// normalized.
inline DensityMatrix random_density_matrix(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix a(dim, dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) a.at(r, c) = cplx(gauss(rng), gauss(rng));
  ComplexMatrix m = a * a.adjoint();
  const double tr = m.trace().real();
  m *= cplx(1.0 / tr, 0.0);
  // Symmetrize away the last-ulp Hermiticity residue of the product.
  ComplexMatrix sym = m;
  sym += m.adjoint();
  sym *= cplx(0.5, 0.0);
  return DensityMatrix::from_matrix(std::move(sym));
}

inline double binary_entropy(double p) {
  double h = 0.0;
  if (p > 0.0) h -= p * std::log2(p);
  if (p < 1.0) h -= (1.0 - p) * std::log2(1.0 - p);
  return h;
}

}  // namespace elgi::test

#endif  // ELGI_TESTS_SUPPORT_HPP
