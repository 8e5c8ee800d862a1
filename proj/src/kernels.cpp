#include "spectradiag/kernels.hpp"

#include <cmath>

namespace spectradiag::kernels {

RealMatrix matmul(const RealMatrix& a, const RealMatrix& b) {
  const int n = a.n();
  RealMatrix c(n);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double sum = 0.0;
      for (int k = 0; k < n; ++k) sum += a(i, k) * b(k, j);
      c(i, j) = sum;
    }
  }
  return c;
}

RealMatrix conj_diag_sym(const RealMatrix& q, std::span<const double> lam) {
  const int n = q.n();
  RealMatrix a(n);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double sum = 0.0;
      for (int k = 0; k < n; ++k) sum += q(i, k) * lam[k] * q(j, k);
      a(i, j) = sum;
    }
  }
  RealMatrix sym(n);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) sym(i, j) = 0.5 * (a(i, j) + a(j, i));
  }
  return sym;
}

RealMatrix squared_entries(const RealMatrix& q) {
  const int n = q.n();
  RealMatrix s(n);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) s(i, j) = q(i, j) * q(i, j);
  }
  return s;
}

double orth_residual(const RealMatrix& q) {
  const int n = q.n();
  double resid = 0.0;
#pragma omp parallel for schedule(static) reduction(max : resid)
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

void apply_rotation_rows(RealMatrix& m, int p, int q, double u, double v) {
  const int n = m.n();
  double* rp = m.row(p);
  double* rq = m.row(q);
#pragma omp parallel for schedule(static) if (n >= 512)
  for (int j = 0; j < n; ++j) {
    const double x = rp[j];
    const double y = rq[j];
    rp[j] = u * x - v * y;
    rq[j] = v * x + u * y;
  }
}

std::pair<double, double> stochastic_residuals(const RealMatrix& s) {
  const int n = s.n();
  double row_resid = 0.0;
  double col_resid = 0.0;
#pragma omp parallel for schedule(static) reduction(max : row_resid, col_resid)
  for (int i = 0; i < n; ++i) {
    double rsum = 0.0;
    double csum = 0.0;
    for (int j = 0; j < n; ++j) {
      rsum += s(i, j);
      csum += s(j, i);
    }
    row_resid = std::max(row_resid, std::abs(rsum - 1.0));
    col_resid = std::max(col_resid, std::abs(csum - 1.0));
  }
  return {row_resid, col_resid};
}

ComplexMatrix cmatmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  const int n = a.n();
  ComplexMatrix c(n);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::complex<double> sum = 0.0;
      for (int k = 0; k < n; ++k) sum += a(i, k) * b(k, j);
      c(i, j) = sum;
    }
  }
  return c;
}

}  // namespace spectradiag::kernels
