#pragma once

#include <complex>
#include <vector>

#include "spectradiag/dense.hpp"
#include "spectradiag/seq.hpp"

namespace spectradiag {

/// The companion-style bidiagonal matrix with lambda on the diagonal and 1
/// on every superdiagonal entry. Upper triangular, so its eigenvalue
/// multiset is exactly lambda with algebraic multiplicity.
struct CompanionBidiagonal {
  ComplexSeq diag;

  int n() const { return static_cast<int>(diag.size()); }
  ComplexMatrix to_matrix() const;
};

CompanionBidiagonal companion_of(const ComplexSeq& lambda);

/// Unit diagonal, zero above the diagonal, both exact (placed, not
/// computed). Closed under multiplication; the inverse exists and is again
/// unit lower triangular.
class UnitLowerTriangular {
 public:
  /// Validates the exact unit-triangular structure.
  static UnitLowerTriangular from_matrix(ComplexMatrix m);
  static UnitLowerTriangular identity(int n);

  const ComplexMatrix& entries() const { return m_; }
  int n() const { return m_.n(); }

  /// max entry magnitude (>= 1); conditioning health metric.
  double growth() const;

 private:
  explicit UnitLowerTriangular(ComplexMatrix m) : m_(std::move(m)) {}
  ComplexMatrix m_;
};

/// Shift for one elementary similarity: c = d_k - lambda_k.
std::complex<double> elementary_step(std::complex<double> lambda_k, std::complex<double> d_k);

struct MirskyCertificate {
  UnitLowerTriangular l;
  ComplexMatrix a;  // L^{-1} [U_Lambda] L, as transformed in place
  ComplexSeq lambda;
  ComplexSeq d;
  std::vector<std::complex<double>> c_values;  // the n-1 elementary shifts
  double similarity_residual;  // max|[U_Lambda] L - L A|, certified without inversion
  double diag_residual;        // max|diag(A) - D|
  double growth;               // max entry magnitude of L
  bool is_real;                // inputs all real; then A and L are exactly real
};

/// Builds unit lower triangular L with diag(L^{-1} [U_Lambda] L) = D.
/// Requires trace_match(lambda, d, tol). Sequences are consumed in user
/// order; no sorting is performed. Real inputs take a real arithmetic path,
/// so the outputs carry exactly zero imaginary parts.
MirskyCertificate mirsky_construct(const ComplexSeq& lambda, const ComplexSeq& d, double tol);

}  // namespace spectradiag
