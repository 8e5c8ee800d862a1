#include "spectradiag/horn.hpp"

#include <cassert>
#include <cmath>
#include <limits>

#include "spectradiag/kernels.hpp"

namespace spectradiag {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double interval_slack(double lambda1, double lambda2, double tol) {
  return tol * std::max(1.0, std::abs(lambda1) + std::abs(lambda2));
}

int pivot_scan(const std::vector<double>& lam, const std::vector<double>& d, double tol,
               double scale) {
  const double slack = tol * std::max(1.0, scale);
  const std::size_t m = lam.size();
  for (std::size_t j = 0; j + 1 < m; ++j) {
    if (d[j + 1] >= lam[j + 1] - slack) return static_cast<int>(j);
  }
  // Unreachable for a majorized pair: if d[j+1] < lam[j+1] everywhere the
  // two sums cannot be equal.
  throw MajorizationError(static_cast<int>(m) - 1);
}

}  // namespace

OrthogonalMatrix OrthogonalMatrix::certify(RealMatrix m) {
  const double resid = kernels::orth_residual(m);
  return OrthogonalMatrix(std::move(m), resid);
}

bool OrthogonalMatrix::meets_invariant() const {
  return resid_ <= kappa_orth * static_cast<double>(n()) * kEps;
}

DoublyStochasticMatrix DoublyStochasticMatrix::from_entries(RealMatrix s) {
  for (double x : s.data()) {
    if (!(x >= 0.0)) throw std::invalid_argument("doubly stochastic entries must be >= 0");
  }
  auto [row_resid, col_resid] = kernels::stochastic_residuals(s);
  return DoublyStochasticMatrix(std::move(s), row_resid, col_resid);
}

TwoByTwoKernel kernel2(double lambda1, double lambda2, double d1, double tol) {
  const double slack = interval_slack(lambda1, lambda2, tol);
  if (d1 < lambda2 - slack || d1 > lambda1 + slack) throw IntervalViolationError();

  // Equal eigenvalues: the interval pins d1 to lambda1, and the identity is
  // exact where the closed form would divide by ~0.
  if (lambda1 - lambda2 <= slack) return {1.0, 0.0};

  double ru = d1 - lambda2;  // u^2 * (lambda1 - lambda2)
  double rv = lambda1 - d1;  // v^2 * (lambda1 - lambda2)
  if (ru < 0.0) ru = 0.0;    // within slack by the interval check
  if (rv < 0.0) rv = 0.0;
  const double den = ru + rv;
  return {std::sqrt(ru / den), std::sqrt(rv / den)};
}

int select_pivot(const RealSeq& lambda_active, const RealSeq& d_active, double tol) {
  if (lambda_active.size() != d_active.size()) throw DimensionMismatchError();
  assert(lambda_active.is_sorted_desc() && d_active.is_sorted_desc());
  return pivot_scan(lambda_active.values(), d_active.values(), tol, lambda_active.max_abs());
}

HornCertificate horn_construct(const RealSeq& lambda, const RealSeq& d, double tol,
                               const HornOptions& opts) {
  if (lambda.size() != d.size()) throw DimensionMismatchError();
  const auto precheck = check_majorization(lambda, d, tol);
  if (!precheck.holds) throw MajorizationError(precheck.first_violation());

  const int n = static_cast<int>(lambda.size());
  const auto [lambda_sorted, p_lambda] = sort_desc(lambda);
  const auto [d_sorted, p_d] = sort_desc(d);
  const double scale = lambda_sorted.max_abs();

  // Iterative form of the recursion. The compressed position j holds the
  // current spectrum value lam[j] living at sorted-space row slot[j], paired
  // with the target dcomp[j]. Each step pins one diagonal entry, deletes the
  // pivot position from all three lists (d_k is now common to both
  // sequences), and substitutes lambda'; the substituted value lands between
  // its new neighbours, so the lists stay descending without re-sorting.
  std::vector<double> lam = lambda_sorted.values();
  std::vector<double> dcomp = d_sorted.values();
  std::vector<int> slot(n);
  for (int i = 0; i < n; ++i) slot[i] = i;

  RealMatrix q_sorted = RealMatrix::identity(n);
  std::vector<PivotStep> steps;
  steps.reserve(n > 0 ? n - 1 : 0);
  std::vector<double> finalized;  // diagonal values already pinned
  finalized.reserve(n);

  while (lam.size() >= 2) {
    const int k = pivot_scan(lam, dcomp, tol, scale);
    const double l1 = lam[k];
    const double l2 = lam[k + 1];
    const double dk = dcomp[k];
    const TwoByTwoKernel kr = kernel2(l1, l2, dk, tol);
    // one subtraction, one addition; ordered so that d_k == lambda_k leaves
    // lambda_{k+1} bit-identical and the whole run degenerates to Q = I
    const double lnew = l2 + (l1 - dk);
    steps.push_back({k, l1, l2, dk, lnew});

    if (!kr.is_identity()) {
      kernels::apply_rotation_rows(q_sorted, slot[k], slot[k + 1], kr.u, kr.v);
    }

    finalized.push_back(dk);
    lam.erase(lam.begin() + k);
    dcomp.erase(dcomp.begin() + k);
    slot.erase(slot.begin() + k);
    lam[k] = lnew;

    if (opts.check_intermediate_majorization) {
      // Lambda' (the updated full multiset) must still majorize D.
      std::vector<double> updated = finalized;
      updated.insert(updated.end(), lam.begin(), lam.end());
      const auto step_check =
          check_majorization(RealSeq(std::move(updated)), d, opts.invariant_tol);
      if (!step_check.holds) throw MajorizationError(step_check.first_violation());
    }
  }
  assert(lam.size() == 1);
  assert(std::abs(lam[0] - dcomp[0]) <=
         10.0 * std::max(tol, static_cast<double>(n) * kEps) * std::max(1.0, scale));

  // Undo the internal sorting: row a of the sorted-space Q targets
  // d_sorted[a] and column b weights lambda_sorted[b], so scatter rows by
  // the d permutation and columns by the lambda permutation.
  RealMatrix q_user(n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      q_user(static_cast<int>(p_d[a]), static_cast<int>(p_lambda[b])) = q_sorted(a, b);
    }
  }

  auto q = OrthogonalMatrix::certify(std::move(q_user));
  assert(q.meets_invariant());

  const RealMatrix a = kernels::conj_diag_sym(q.entries(), lambda.values());
  double diag_resid = 0.0;
  for (int i = 0; i < n; ++i) diag_resid = std::max(diag_resid, std::abs(a(i, i) - d[i]));

  const double orth_resid = q.orth_residual();
  return HornCertificate{std::move(q), lambda, d, diag_resid, orth_resid, std::move(steps)};
}

DoublyStochasticMatrix orthostochastic_of(const OrthogonalMatrix& q) {
  return DoublyStochasticMatrix::from_entries(kernels::squared_entries(q.entries()));
}

RealMatrix hermitian_of(const OrthogonalMatrix& q, const RealSeq& lambda) {
  if (static_cast<std::size_t>(q.n()) != lambda.size()) throw DimensionMismatchError();
  return kernels::conj_diag_sym(q.entries(), lambda.values());
}

}  // namespace spectradiag
