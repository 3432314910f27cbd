#include "elgi/spin.hpp"

#include <cmath>
#include <stdexcept>

namespace elgi {

int spin_dimension(double s) {
  if (!(s > 0.0) || !std::isfinite(s)) {
    throw std::invalid_argument("spin: s must be a positive half-integer");
  }
  const double two_s = 2.0 * s;
  if (std::abs(two_s - std::round(two_s)) > 1e-12) {
    throw std::invalid_argument("spin: s must be a positive half-integer");
  }
  return static_cast<int>(std::round(two_s)) + 1;
}

SpinOps spin_operators(double s) {
  const int dim = spin_dimension(s);

  // <m+1|S+|m> = sqrt(s(s+1) - m(m+1)); index j holds m_j = s - j, so S+
  // maps index j to j-1.
  ComplexMatrix s_plus(dim, dim);
  for (int j = 1; j < dim; ++j) {
    const double m = s - j;
    s_plus.at(j - 1, j) = std::sqrt(s * (s + 1.0) - m * (m + 1.0));
  }
  const ComplexMatrix s_minus = s_plus.adjoint();

  SpinOps ops{s, ComplexMatrix(dim, dim), ComplexMatrix(dim, dim), ComplexMatrix(dim, dim)};
  ops.sx = cplx(0.5, 0.0) * (s_plus + s_minus);
  ops.sy = cplx(0.0, -0.5) * (s_plus - s_minus);
  for (int j = 0; j < dim; ++j) ops.sz.at(j, j) = s - j;
  return ops;
}

ComplexMatrix rotation_unitary(double s, double theta) {
  if (!std::isfinite(theta)) throw std::invalid_argument("rotation_unitary: theta must be finite");
  const SpinOps ops = spin_operators(s);
  ComplexMatrix arg = ops.sx;
  arg *= cplx(0.0, theta);
  return matrix_exponential(arg);
}

}  // namespace elgi
