#include "elgi/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace elgi {

ComplexMatrix::ComplexMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) {
    throw std::invalid_argument("ComplexMatrix: negative dimension");
  }
  data_.assign(static_cast<std::size_t>(rows) * cols, cplx(0.0, 0.0));
}

ComplexMatrix ComplexMatrix::identity(int n) {
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::zero(int rows, int cols) { return ComplexMatrix(rows, cols); }

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out.at(c, r) = std::conj(at(r, c));
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
  return out;
}

cplx ComplexMatrix::trace() const {
  if (rows_ != cols_) throw std::invalid_argument("trace: matrix not square");
  cplx t = 0.0;
  for (int i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw std::invalid_argument("matrix addition: shape mismatch");
  }
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw std::invalid_argument("matrix subtraction: shape mismatch");
  }
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx scalar) {
  for (auto& v : data_) v *= scalar;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
  ComplexMatrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      const cplx aik = a.at(i, k);
      if (aik == cplx(0.0, 0.0)) continue;
      for (int j = 0; j < b.cols(); ++j) out.at(i, j) += aik * b.at(k, j);
    }
  }
  return out;
}

ComplexMatrix operator*(cplx scalar, ComplexMatrix a) { return a *= scalar; }

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int ar = 0; ar < a.rows(); ++ar)
    for (int ac = 0; ac < a.cols(); ++ac) {
      const cplx v = a.at(ar, ac);
      if (v == cplx(0.0, 0.0)) continue;
      for (int br = 0; br < b.rows(); ++br)
        for (int bc = 0; bc < b.cols(); ++bc)
          out.at(ar * b.rows() + br, ac * b.cols() + bc) = v * b.at(br, bc);
    }
  return out;
}

double max_abs(const ComplexMatrix& a) {
  double m = 0.0;
  for (const auto& v : a.data()) m = std::max(m, std::abs(v));
  return m;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("max_abs_diff: shape mismatch");
  }
  double m = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) {
    m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
  }
  return m;
}

double one_norm(const ComplexMatrix& a) {
  double best = 0.0;
  for (int c = 0; c < a.cols(); ++c) {
    double col = 0.0;
    for (int r = 0; r < a.rows(); ++r) col += std::abs(a.at(r, c));
    best = std::max(best, col);
  }
  return best;
}

bool is_hermitian(const ComplexMatrix& a, double tol) {
  if (a.rows() != a.cols()) return false;
  return max_abs_diff(a, a.adjoint()) <= tol;
}

bool is_unitary(const ComplexMatrix& a, double tol) {
  if (a.rows() != a.cols()) return false;
  return max_abs_diff(a.adjoint() * a, ComplexMatrix::identity(a.rows())) <= tol;
}

ComplexMatrix matrix_exponential(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("matrix_exponential: matrix not square");
  const int n = a.rows();

  int squarings = 0;
  double norm = one_norm(a);
  while (norm > 0.5 && squarings < 64) {
    norm *= 0.5;
    ++squarings;
  }
  const double scale = std::ldexp(1.0, -squarings);

  ComplexMatrix scaled = a;
  scaled *= scale;

  constexpr int kTaylorOrder = 12;
  ComplexMatrix result = ComplexMatrix::identity(n);
  ComplexMatrix term = ComplexMatrix::identity(n);
  for (int k = 1; k <= kTaylorOrder; ++k) {
    term = term * scaled;
    term *= cplx(1.0 / k, 0.0);
    result += term;
  }

  for (int i = 0; i < squarings; ++i) result = result * result;
  return result;
}

namespace {

// One cyclic Jacobi sweep target: annihilate the (p,q) entry of Hermitian A
// with a complex plane rotation applied on both sides.
void jacobi_rotate(ComplexMatrix& a, int p, int q) {
  const cplx apq = a.at(p, q);
  const double abs_apq = std::abs(apq);
  if (abs_apq == 0.0) return;

  const double app = a.at(p, p).real();
  const double aqq = a.at(q, q).real();
  const double tau = (aqq - app) / (2.0 * abs_apq);
  double t;
  if (tau >= 0.0) {
    t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
  } else {
    t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
  }
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  const cplx phase = apq / abs_apq;

  const int n = a.rows();
  // Columns p and q: A <- A J with J_pp = c, J_qp = -s*conj(phase),
  // J_pq = s*phase, J_qq = c.
  for (int k = 0; k < n; ++k) {
    const cplx akp = a.at(k, p);
    const cplx akq = a.at(k, q);
    a.at(k, p) = c * akp - s * std::conj(phase) * akq;
    a.at(k, q) = s * phase * akp + c * akq;
  }
  // Rows p and q: A <- J^dagger A.
  for (int k = 0; k < n; ++k) {
    const cplx apk = a.at(p, k);
    const cplx aqk = a.at(q, k);
    a.at(p, k) = c * apk - s * phase * aqk;
    a.at(q, k) = s * std::conj(phase) * apk + c * aqk;
  }
  a.at(p, q) = 0.0;
  a.at(q, p) = 0.0;
}

double off_diagonal_norm(const ComplexMatrix& a) {
  double sum = 0.0;
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c)
      if (r != c) sum += std::norm(a.at(r, c));
  return std::sqrt(sum);
}

}  // namespace

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) {
    throw std::invalid_argument("hermitian_eigenvalues: matrix not square");
  }
  if (!is_hermitian(a, 1e-8)) {
    throw std::invalid_argument("hermitian_eigenvalues: matrix not Hermitian");
  }
  ComplexMatrix work = a;
  const int n = work.rows();
  constexpr int kMaxSweeps = 60;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(work) < 1e-14 * std::max(1.0, max_abs(work))) break;
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) jacobi_rotate(work, p, q);
  }
  std::vector<double> eig(n);
  for (int i = 0; i < n; ++i) eig[i] = work.at(i, i).real();
  std::sort(eig.begin(), eig.end());
  return eig;
}

}  // namespace elgi
