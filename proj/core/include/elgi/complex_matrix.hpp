#ifndef ELGI_COMPLEX_MATRIX_HPP
#define ELGI_COMPLEX_MATRIX_HPP

#include <complex>
#include <vector>

namespace elgi {

using cplx = std::complex<double>;

// Dense row-major complex matrix. Dimensions in this library stay small
// (<= 16), so everything is plain O(n^3) arithmetic on contiguous storage.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(int rows, int cols);

  static ComplexMatrix identity(int n);
  static ComplexMatrix zero(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  cplx& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const cplx& at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  const std::vector<cplx>& data() const { return data_; }
  std::vector<cplx>& data() { return data_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  cplx trace() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(cplx scalar);

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<cplx> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx scalar, ComplexMatrix a);

// Standard tensor (Kronecker) product; dimensions multiply.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

double max_abs(const ComplexMatrix& a);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
double one_norm(const ComplexMatrix& a);

bool is_hermitian(const ComplexMatrix& a, double tol);
bool is_unitary(const ComplexMatrix& a, double tol);

// exp(A) by scaling-and-squaring with an order-12 truncated Taylor series;
// the argument is scaled until its 1-norm is <= 0.5 before squaring back.
ComplexMatrix matrix_exponential(const ComplexMatrix& a);

// Eigenvalues of a Hermitian matrix, ascending, via cyclic Jacobi rotations.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a);

}  // namespace elgi

#endif  // ELGI_COMPLEX_MATRIX_HPP
