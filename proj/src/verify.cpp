#include "spectradiag/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "spectradiag/ref_kernels.hpp"

namespace spectradiag {

namespace {

double off_diag_frobenius(const RealMatrix& a) {
  const int n = a.n();
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) sum += 2.0 * a(i, j) * a(i, j);
  }
  return std::sqrt(sum);
}

double frobenius(const RealMatrix& a) {
  double sum = 0.0;
  for (double x : a.data()) sum += x * x;
  return std::sqrt(sum);
}

std::complex<double> trace(const ComplexMatrix& a) {
  std::complex<double> t = 0.0;
  for (int i = 0; i < a.n(); ++i) t += a(i, i);
  return t;
}

// Max relative coefficient mismatch between the characteristic polynomial
// of a and prod (x - lambda_j).
double charpoly_mismatch(const ComplexMatrix& a, const std::vector<std::complex<double>>& roots) {
  const auto actual = char_poly(a);
  const auto expected = poly_from_roots(roots);
  double err = 0.0;
  for (std::size_t k = 0; k < expected.size(); ++k) {
    const double rel =
        std::abs(actual[k] - expected[k]) / std::max(1.0, std::abs(expected[k]));
    err = std::max(err, rel);
  }
  return err;
}

}  // namespace

JacobiResult jacobi_eigenvalues_detail(const RealMatrix& a0, double tol, int max_sweeps) {
  if (max_sweeps < 1) throw std::invalid_argument("max_sweeps must be >= 1");
  const int n = a0.n();

  double asym = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) asym = std::max(asym, std::abs(a0(i, j) - a0(j, i)));
  }
  if (asym > 1e-12 * std::max(1.0, max_abs(a0))) throw NotSymmetricError();

  RealMatrix a(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a(i, j) = 0.5 * (a0(i, j) + a0(j, i));
  }

  const double target = tol * std::max(frobenius(a), std::numeric_limits<double>::min());
  int sweeps = 0;
  double off = off_diag_frobenius(a);
  while (off > target) {
    if (sweeps == max_sweeps) throw NoConvergenceError(off);
    // one cyclic-by-row sweep
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e100) {
          t = 0.5 / theta;
        } else {
          t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = a(q, p) = 0.0;
        for (int i = 0; i < n; ++i) {
          if (i == p || i == q) continue;
          const double aip = a(i, p);
          const double aiq = a(i, q);
          a(i, p) = a(p, i) = c * aip - s * aiq;
          a(i, q) = a(q, i) = s * aip + c * aiq;
        }
      }
    }
    ++sweeps;
    off = off_diag_frobenius(a);
  }

  std::vector<double> eig(n);
  for (int i = 0; i < n; ++i) eig[i] = a(i, i);
  std::sort(eig.begin(), eig.end(), std::greater<>());
  return JacobiResult{RealSeq(std::move(eig)), sweeps, off};
}

RealSeq jacobi_eigenvalues(const RealMatrix& a, double tol, int max_sweeps) {
  return jacobi_eigenvalues_detail(a, tol, max_sweeps).values;
}

std::vector<std::complex<double>> char_poly(const ComplexMatrix& a) {
  const int n = a.n();
  std::vector<std::complex<double>> p(n + 1);
  p[0] = 1.0;
  ComplexMatrix m = a;
  for (int k = 1; k <= n; ++k) {
    p[k] = -trace(m) / static_cast<double>(k);
    if (k == n) break;
    for (int i = 0; i < n; ++i) m(i, i) += p[k];
    m = ref::cmatmul(a, m);
  }
  return p;
}

std::vector<std::complex<double>> poly_from_roots(const std::vector<std::complex<double>>& roots) {
  std::vector<std::complex<double>> p{1.0};
  for (const auto& r : roots) {
    std::vector<std::complex<double>> next(p.size() + 1);
    for (std::size_t k = 0; k < p.size(); ++k) {
      next[k] += p[k];
      next[k + 1] -= r * p[k];
    }
    p = std::move(next);
  }
  return p;
}

VerifyReport verify_horn(const HornCertificate& cert, const TolProfile& profile) {
  const int n = cert.q.n();
  const RealMatrix& q = cert.q.entries();
  const double scale = std::max(1.0, cert.lambda.max_abs());

  VerifyReport report;
  report.thresholds.diag = profile.diag * n * scale;
  report.thresholds.orth = profile.orth * n;
  report.thresholds.eig = profile.eig * scale;
  report.thresholds.schur = profile.schur * n * scale;
  report.thresholds.ds_sum = profile.ds_sum * n;

  const RealMatrix a = ref::conj_diag(q, cert.lambda.values());
  for (int i = 0; i < n; ++i) {
    report.diag_err = std::max(report.diag_err, std::abs(a(i, i) - cert.d[i]));
  }

  report.orth_err = ref::orth_residual(q);

  RealMatrix a_sym(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a_sym(i, j) = 0.5 * (a(i, j) + a(j, i));
  }
  auto lambda_sorted = cert.lambda.values();
  std::sort(lambda_sorted.begin(), lambda_sorted.end(), std::greater<>());
  const auto eig = jacobi_eigenvalues(a_sym, profile.jacobi_tol, profile.jacobi_max_sweeps);
  for (int i = 0; i < n; ++i) {
    report.eig_err = std::max(report.eig_err, std::abs(eig[i] - lambda_sorted[i]));
  }

  // Schur relation d_i = sum_j q_ij^2 lambda_j, plus the stochastic sums.
  for (int i = 0; i < n; ++i) {
    double si = 0.0;
    double rsum = 0.0;
    double csum = 0.0;
    for (int j = 0; j < n; ++j) {
      si += q(i, j) * q(i, j) * cert.lambda[j];
      rsum += q(i, j) * q(i, j);
      csum += q(j, i) * q(j, i);
    }
    report.schur_relation_err = std::max(report.schur_relation_err, std::abs(si - cert.d[i]));
    report.ds_row_err = std::max(report.ds_row_err, std::abs(rsum - 1.0));
    report.ds_col_err = std::max(report.ds_col_err, std::abs(csum - 1.0));
  }

  report.pass = report.diag_err <= report.thresholds.diag &&
                report.orth_err <= report.thresholds.orth &&
                report.eig_err <= report.thresholds.eig &&
                report.schur_relation_err <= report.thresholds.schur &&
                report.ds_row_err <= report.thresholds.ds_sum &&
                report.ds_col_err <= report.thresholds.ds_sum;
  return report;
}

VerifyReport verify_mirsky(const MirskyCertificate& cert, const TolProfile& profile) {
  const int n = cert.a.n();
  const double scale =
      std::max({1.0, cert.lambda.max_abs(), cert.d.max_abs()});

  VerifyReport report;
  report.thresholds.diag = profile.mirsky_diag * scale;
  report.thresholds.similarity = profile.similarity * n * std::max(1.0, cert.growth);
  report.thresholds.charpoly = profile.charpoly;

  for (int i = 0; i < n; ++i) {
    report.diag_err = std::max(report.diag_err, std::abs(cert.a(i, i) - cert.d[i]));
  }

  const ComplexMatrix u = companion_of(cert.lambda).to_matrix();
  report.similarity_err = max_abs_diff(ref::cmatmul(u, cert.l.entries()),
                                       ref::cmatmul(cert.l.entries(), cert.a));

  if (n <= 6) {
    report.charpoly_err = charpoly_mismatch(cert.a, cert.lambda.values());
  }

  report.pass = report.diag_err <= report.thresholds.diag &&
                report.similarity_err <= report.thresholds.similarity &&
                report.charpoly_err <= report.thresholds.charpoly;
  return report;
}

}  // namespace spectradiag
