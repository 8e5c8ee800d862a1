#pragma once

#include <vector>

#include "spectradiag/dense.hpp"
#include "spectradiag/seq.hpp"

namespace spectradiag {

/// The 2x2 rotation block [[u,-v],[v,u]] with u,v >= 0 solving the base
/// case: conjugating diag(lambda1, lambda2) by it yields the diagonal
/// (d1, lambda1+lambda2-d1).
struct TwoByTwoKernel {
  double u;
  double v;

  bool is_identity() const { return u == 1.0 && v == 0.0; }
};

/// One reduction step of the recursion, recorded for auditing. k is the
/// 0-based position in the active (compressed) sequences.
struct PivotStep {
  int k;
  double lambda_k;
  double lambda_k1;
  double d_k;
  double lambda_k1_new;  // lambda_k1 + (lambda_k - d_k), exactly as computed
};

/// Dense real matrix whose orthogonality defect has been measured on
/// construction. Matrices produced by horn_construct satisfy
/// max|Q^T Q - I| <= kappa_orth * n * eps; matrices loaded from files may
/// carry any residual (verification, not construction, rejects those).
class OrthogonalMatrix {
 public:
  static constexpr double kappa_orth = 4096.0;

  /// Measures and records the orthogonality residual of m.
  static OrthogonalMatrix certify(RealMatrix m);

  const RealMatrix& entries() const { return m_; }
  int n() const { return m_.n(); }
  double orth_residual() const { return resid_; }
  bool meets_invariant() const;

 private:
  OrthogonalMatrix(RealMatrix m, double resid) : m_(std::move(m)), resid_(resid) {}
  RealMatrix m_;
  double resid_;
};

/// Nonnegative matrix with recorded row/column-sum deviations from 1.
class DoublyStochasticMatrix {
 public:
  /// Validates entries >= 0 and records the sum residuals.
  static DoublyStochasticMatrix from_entries(RealMatrix s);

  const RealMatrix& entries() const { return s_; }
  int n() const { return s_.n(); }
  double row_residual() const { return row_resid_; }
  double col_residual() const { return col_resid_; }

 private:
  DoublyStochasticMatrix(RealMatrix s, double r, double c)
      : s_(std::move(s)), row_resid_(r), col_resid_(c) {}
  RealMatrix s_;
  double row_resid_;
  double col_resid_;
};

struct HornOptions {
  // Re-check that the updated spectrum still majorizes the target after
  // every pivot step. Always on in debug builds.
#ifndef NDEBUG
  bool check_intermediate_majorization = true;
#else
  bool check_intermediate_majorization = false;
#endif
  double invariant_tol = 1e-12;
};

/// Output of horn_construct: Q with diag(Q [Lambda] Q^T) = D in the
/// caller's original ordering, plus the audit trail of the recursion.
struct HornCertificate {
  OrthogonalMatrix q;
  RealSeq lambda;        // user order
  RealSeq d;             // user order
  double diag_residual;  // max|diag(Q [Lambda] Q^T) - D|, recomputed at certification
  double orth_residual;
  std::vector<PivotStep> steps;
};

/// Base-case kernel. Preconditions: lambda1 >= d1 >= lambda2 up to
/// tol*max(1,|lambda1|+|lambda2|). Radicands that go negative within that
/// slack are clamped to zero; lambda1 == lambda2 within the slack returns
/// the identity kernel.
TwoByTwoKernel kernel2(double lambda1, double lambda2, double d1, double tol);

/// Smallest 0-based j with d[j+1] >= lambda[j+1] - slack. Both sequences
/// must be sorted descending and majorization must hold; a missing pivot
/// means the pair was invalid.
int select_pivot(const RealSeq& lambda_active, const RealSeq& d_active, double tol);

HornCertificate horn_construct(const RealSeq& lambda, const RealSeq& d, double tol,
                               const HornOptions& opts = {});

/// S with S_ij = q_ij^2.
DoublyStochasticMatrix orthostochastic_of(const OrthogonalMatrix& q);

/// A = Q diag(lambda) Q^T, symmetrized as (A + A^T)/2.
RealMatrix hermitian_of(const OrthogonalMatrix& q, const RealSeq& lambda);

}  // namespace spectradiag
