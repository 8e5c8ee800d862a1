#pragma once

#include <complex>
#include <vector>

#include "spectradiag/dense.hpp"
#include "spectradiag/horn.hpp"
#include "spectradiag/mirsky.hpp"
#include "spectradiag/seq.hpp"

// Independent verification oracles. Everything here recomputes from scratch
// with the serial reference kernels and its own eigensolver; no constructor
// code path is reused, so a constructor bug cannot certify itself.
namespace spectradiag {

struct JacobiResult {
  RealSeq values;  // sorted descending
  int sweeps;
  double off_norm;
};

/// Cyclic-by-row Jacobi eigenvalues of a symmetric matrix. Stops when the
/// off-diagonal Frobenius norm drops below tol * ||a||_F. Deterministic
/// sweep order.
JacobiResult jacobi_eigenvalues_detail(const RealMatrix& a, double tol, int max_sweeps);
RealSeq jacobi_eigenvalues(const RealMatrix& a, double tol = 1e-12, int max_sweeps = 30);

/// Thresholds are derived per check as factor * n^p * scale; see defaults().
struct TolProfile {
  double diag = 1e-10;         // * n * max(1, ||lambda||_inf)
  double orth = 1e-12;         // * n
  double eig = 1e-8;           // * max(1, ||lambda||_inf)
  double schur = 1e-10;        // * n * max(1, ||lambda||_inf)
  double ds_sum = 1e-12;       // * n
  double mirsky_diag = 1e-12;  // * max(1, ||lambda||_inf, ||d||_inf), per entry
  double similarity = 1e-10;   // * n * growth(L)
  double charpoly = 1e-8;      // relative, per coefficient
  double jacobi_tol = 1e-12;
  int jacobi_max_sweeps = 30;

  static TolProfile defaults() { return {}; }
};

struct VerifyThresholds {
  double diag = 0, orth = 0, eig = 0, schur = 0, ds_sum = 0, similarity = 0, charpoly = 0;
};

struct VerifyReport {
  double diag_err = 0;
  double orth_err = 0;
  double eig_err = 0;
  double schur_relation_err = 0;
  double ds_row_err = 0;
  double ds_col_err = 0;
  double similarity_err = 0;
  double charpoly_err = 0;
  VerifyThresholds thresholds;
  bool pass = false;
};

/// Recomputes A = Q [Lambda] Q^T densely, then checks diag(A) vs D,
/// Q^T Q vs I, Jacobi eigenvalues vs sorted Lambda, and the relation
/// D = S Lambda with S the squared entries of Q.
VerifyReport verify_horn(const HornCertificate& cert,
                         const TolProfile& profile = TolProfile::defaults());

/// Checks diag(A) vs D and the similarity residual ||[U_Lambda] L - L A||;
/// for n <= 6 also compares the characteristic polynomial of A against
/// the product of (x - lambda_j).
VerifyReport verify_mirsky(const MirskyCertificate& cert,
                           const TolProfile& profile = TolProfile::defaults());

/// Monic characteristic polynomial coefficients (p[0] = 1) via the
/// Faddeev-LeVerrier recurrence. Intended for small n; coefficients grow
/// combinatorially.
std::vector<std::complex<double>> char_poly(const ComplexMatrix& a);

/// Coefficients of prod_j (x - roots[j]), monic, by direct expansion.
std::vector<std::complex<double>> poly_from_roots(const std::vector<std::complex<double>>& roots);

}  // namespace spectradiag
