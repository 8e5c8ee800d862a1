#include "spectradiag/ref_kernels.hpp"

#include <cmath>

namespace spectradiag::ref {

RealMatrix matmul(const RealMatrix& a, const RealMatrix& b) {
  const int n = a.n();
  RealMatrix c(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double sum = 0.0;
      for (int k = 0; k < n; ++k) sum += a(i, k) * b(k, j);
      c(i, j) = sum;
    }
  }
  return c;
}

RealMatrix conj_diag(const RealMatrix& q, std::span<const double> lam) {
  const int n = q.n();
  RealMatrix a(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double sum = 0.0;
      for (int k = 0; k < n; ++k) sum += q(i, k) * lam[k] * q(j, k);
      a(i, j) = sum;
    }
  }
  return a;
}

double orth_residual(const RealMatrix& q) {
  const int n = q.n();
  double resid = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double sum = 0.0;
      for (int k = 0; k < n; ++k) sum += q(k, i) * q(k, j);
      if (i == j) sum -= 1.0;
      resid = std::max(resid, std::abs(sum));
    }
  }
  return resid;
}

ComplexMatrix cmatmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  const int n = a.n();
  ComplexMatrix c(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::complex<double> sum = 0.0;
      for (int k = 0; k < n; ++k) sum += a(i, k) * b(k, j);
      c(i, j) = sum;
    }
  }
  return c;
}

}  // namespace spectradiag::ref
