#include "spectradiag/mirsky.hpp"

#include <cmath>

#include "spectradiag/kernels.hpp"

namespace spectradiag {

namespace {

template <typename Scalar>
struct ChainResult {
  SquareMatrix<Scalar> a;
  SquareMatrix<Scalar> l;
  std::vector<Scalar> c;
};

// The induction as a forward loop. Step k conjugates by the elementary
// factor L_k = I + c_k E_{k+1,k} with c_k chosen so the (k,k) entry becomes
// d_k; the trailing block stays a companion matrix of the updated sequence,
// so the next step sees the same shape one size down. A <- L_k^{-1} (A L_k)
// is a column update followed by a row update; L accumulates the ordered
// product L_0 L_1 ... on the right.
template <typename Scalar>
ChainResult<Scalar> run_chain(const std::vector<Scalar>& lam, const std::vector<Scalar>& d) {
  const int n = static_cast<int>(lam.size());
  SquareMatrix<Scalar> a(n);
  for (int i = 0; i < n; ++i) a(i, i) = lam[i];
  for (int i = 0; i + 1 < n; ++i) a(i, i + 1) = Scalar{1};

  auto l = SquareMatrix<Scalar>::identity(n);
  std::vector<Scalar> c;
  c.reserve(n > 0 ? n - 1 : 0);

  for (int k = 0; k + 1 < n; ++k) {
    const Scalar ck = d[k] - a(k, k);
    c.push_back(ck);
    if (ck == Scalar{}) continue;  // keeps Lambda = D runs bit-exact
    for (int i = 0; i < n; ++i) a(i, k) += ck * a(i, k + 1);
    for (int j = 0; j < n; ++j) a(k + 1, j) -= ck * a(k, j);
    for (int i = 0; i < n; ++i) l(i, k) += ck * l(i, k + 1);
  }
  return {std::move(a), std::move(l), std::move(c)};
}

std::vector<double> real_parts(const ComplexSeq& s) {
  std::vector<double> v(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) v[i] = s[i].real();
  return v;
}

}  // namespace

ComplexMatrix CompanionBidiagonal::to_matrix() const {
  const int m = n();
  ComplexMatrix u(m);
  for (int i = 0; i < m; ++i) u(i, i) = diag[i];
  for (int i = 0; i + 1 < m; ++i) u(i, i + 1) = 1.0;
  return u;
}

CompanionBidiagonal companion_of(const ComplexSeq& lambda) { return CompanionBidiagonal{lambda}; }

UnitLowerTriangular UnitLowerTriangular::from_matrix(ComplexMatrix m) {
  const int n = m.n();
  for (int i = 0; i < n; ++i) {
    if (m(i, i) != std::complex<double>(1.0, 0.0)) {
      throw std::invalid_argument("diagonal must be exactly 1");
    }
    for (int j = i + 1; j < n; ++j) {
      if (m(i, j) != std::complex<double>(0.0, 0.0)) {
        throw std::invalid_argument("entries above the diagonal must be exactly 0");
      }
    }
  }
  return UnitLowerTriangular(std::move(m));
}

UnitLowerTriangular UnitLowerTriangular::identity(int n) {
  return UnitLowerTriangular(ComplexMatrix::identity(n));
}

double UnitLowerTriangular::growth() const { return max_abs(m_); }

std::complex<double> elementary_step(std::complex<double> lambda_k, std::complex<double> d_k) {
  return d_k - lambda_k;
}

MirskyCertificate mirsky_construct(const ComplexSeq& lambda, const ComplexSeq& d, double tol) {
  if (lambda.size() != d.size()) throw DimensionMismatchError();
  if (!trace_match(lambda, d, tol)) throw TraceMismatchError();

  const int n = static_cast<int>(lambda.size());
  const bool is_real = lambda.all_real() && d.all_real();

  ComplexMatrix a, l_entries;
  std::vector<std::complex<double>> c_values;
  double similarity_resid = 0.0;

  if (is_real) {
    // Real inputs run in real arithmetic, so no imaginary parts can appear.
    auto chain = run_chain<double>(real_parts(lambda), real_parts(d));
    RealMatrix u(n);
    for (int i = 0; i < n; ++i) u(i, i) = lambda[i].real();
    for (int i = 0; i + 1 < n; ++i) u(i, i + 1) = 1.0;
    similarity_resid =
        max_abs_diff(kernels::matmul(u, chain.l), kernels::matmul(chain.l, chain.a));
    a = widen(chain.a);
    l_entries = widen(chain.l);
    c_values.assign(chain.c.begin(), chain.c.end());
  } else {
    auto chain = run_chain<std::complex<double>>(lambda.values(), d.values());
    const ComplexMatrix u = companion_of(lambda).to_matrix();
    similarity_resid =
        max_abs_diff(kernels::cmatmul(u, chain.l), kernels::cmatmul(chain.l, chain.a));
    a = std::move(chain.a);
    l_entries = std::move(chain.l);
    c_values = std::move(chain.c);
  }

  auto l = UnitLowerTriangular::from_matrix(std::move(l_entries));
  const double growth = l.growth();

  double diag_resid = 0.0;
  for (int i = 0; i < n; ++i) diag_resid = std::max(diag_resid, std::abs(a(i, i) - d[i]));

  return MirskyCertificate{std::move(l), std::move(a), lambda, d, std::move(c_values),
                           similarity_resid, diag_resid, growth, is_real};
}

}  // namespace spectradiag
