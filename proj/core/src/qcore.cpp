#include "elgi/qcore.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace elgi {

DensityMatrix DensityMatrix::from_matrix(ComplexMatrix m, double expected_mass) {
  if (m.rows() != m.cols() || m.rows() < 1) {
    throw std::invalid_argument("DensityMatrix: matrix must be square and nonempty");
  }
  if (!is_hermitian(m, kHermitianTol)) {
    throw std::domain_error("DensityMatrix: matrix not Hermitian within 1e-10");
  }
  const double tr = m.trace().real();
  if (std::abs(tr - expected_mass) > kTraceTol) {
    throw std::domain_error("DensityMatrix: trace " + std::to_string(tr) +
                            " deviates from expected mass " + std::to_string(expected_mass));
  }
  const auto eig = hermitian_eigenvalues(m);
  if (eig.front() < -kPsdEigTol) {
    throw std::domain_error("DensityMatrix: negative eigenvalue " + std::to_string(eig.front()));
  }
  return DensityMatrix(std::move(m), expected_mass);
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
  ComplexMatrix m = ComplexMatrix::identity(dim);
  m *= cplx(1.0 / dim, 0.0);
  return DensityMatrix(std::move(m), 1.0);
}

DensityMatrix DensityMatrix::basis_state(int dim, int index) {
  if (index < 0 || index >= dim) throw std::invalid_argument("basis_state: index out of range");
  ComplexMatrix m(dim, dim);
  m.at(index, index) = 1.0;
  return DensityMatrix(std::move(m), 1.0);
}

DensityMatrix evolve(const DensityMatrix& rho, const ComplexMatrix& u) {
  if (u.rows() != rho.dim() || u.cols() != rho.dim()) {
    throw std::invalid_argument("evolve: unitary dimension mismatch");
  }
  return DensityMatrix::from_matrix(u * rho.matrix() * u.adjoint(), rho.mass());
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& dims,
                            const std::vector<int>& keep) {
  int total = 1;
  for (int d : dims) {
    if (d < 1) throw std::invalid_argument("partial_trace: subsystem dims must be positive");
    total *= d;
  }
  if (total != rho.dim()) {
    throw std::invalid_argument("partial_trace: product of dims does not match state dimension");
  }
  for (int k : keep) {
    if (k < 0 || k >= static_cast<int>(dims.size())) {
      throw std::invalid_argument("partial_trace: keep index out of range");
    }
  }

  const int n_sub = static_cast<int>(dims.size());
  std::vector<bool> kept(n_sub, false);
  for (int k : keep) kept[k] = true;

  int keep_dim = 1, trace_dim = 1;
  for (int i = 0; i < n_sub; ++i) (kept[i] ? keep_dim : trace_dim) *= dims[i];

  // Row-major strides: subsystem 0 is the leftmost (most significant) factor.
  std::vector<int> stride(n_sub, 1);
  for (int i = n_sub - 2; i >= 0; --i) stride[i] = stride[i + 1] * dims[i + 1];

  // Full-index offset contributed by each composite kept / traced index,
  // with digits peeled most-significant first within each group.
  auto group_offsets = [&](bool want_kept, int group_dim) {
    std::vector<int> offsets(group_dim, 0);
    for (int idx = 0; idx < group_dim; ++idx) {
      int rem = idx, full = 0;
      for (int i = n_sub - 1; i >= 0; --i) {
        if (kept[i] != want_kept) continue;
        full += (rem % dims[i]) * stride[i];
        rem /= dims[i];
      }
      offsets[idx] = full;
    }
    return offsets;
  };
  const std::vector<int> keep_off = group_offsets(true, keep_dim);
  const std::vector<int> trace_off = group_offsets(false, trace_dim);

  ComplexMatrix out(keep_dim, keep_dim);
  for (int r = 0; r < keep_dim; ++r) {
    for (int c = 0; c < keep_dim; ++c) {
      cplx acc = 0.0;
      for (int t = 0; t < trace_dim; ++t) {
        acc += rho.matrix().at(keep_off[r] + trace_off[t], keep_off[c] + trace_off[t]);
      }
      out.at(r, c) = acc;
    }
  }
  return DensityMatrix::from_matrix(std::move(out), rho.mass());
}

DensityMatrix dephase(const DensityMatrix& rho) {
  ComplexMatrix out(rho.dim(), rho.dim());
  for (int i = 0; i < rho.dim(); ++i) out.at(i, i) = rho.matrix().at(i, i);
  return DensityMatrix::from_matrix(std::move(out), rho.mass());
}

DensityMatrix project_branch(const DensityMatrix& rho, const ComplexMatrix& projector) {
  if (projector.rows() != rho.dim() || projector.cols() != rho.dim()) {
    throw std::invalid_argument("project_branch: projector dimension mismatch");
  }
  if (max_abs_diff(projector * projector, projector) > kHermitianTol) {
    throw std::invalid_argument("project_branch: projector not idempotent within 1e-10");
  }
  ComplexMatrix m = projector * rho.matrix() * projector.adjoint();
  const double branch_mass = m.trace().real();
  return DensityMatrix::from_matrix(std::move(m), branch_mass);
}

ProbTable diag_probabilities(const DensityMatrix& rho) {
  ProbTable table(1, rho.dim(), rho.mass());
  for (int i = 0; i < rho.dim(); ++i) {
    const double p = rho.matrix().at(i, i).real();
    if (p < -1e-6) {
      throw std::domain_error("diag_probabilities: diagonal entry " + std::to_string(p) +
                              " below -1e-6 signals an upstream bug");
    }
    table.at(i) = p;
  }
  table.validate();
  return table;
}

}  // namespace elgi
