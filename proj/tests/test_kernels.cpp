#include <cmath>

#include "doctest.h"
#include "spectradiag/gen.hpp"
#include "spectradiag/kernels.hpp"
#include "spectradiag/ref_kernels.hpp"

using namespace spectradiag;

namespace {

RealMatrix random_matrix(int n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  RealMatrix m(n);
  for (double& x : m.data()) x = 2.0 * rng.next_double() - 1.0;
  return m;
}

ComplexMatrix random_cmatrix(int n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  ComplexMatrix m(n);
  for (auto& x : m.data()) x = {2.0 * rng.next_double() - 1.0, 2.0 * rng.next_double() - 1.0};
  return m;
}

// Orthogonal matrix assembled from random plane rotations.
RealMatrix random_orthogonal(int n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  RealMatrix q = RealMatrix::identity(n);
  for (int t = 0; t < 4 * n; ++t) {
    const int p = static_cast<int>(rng.next_index(n));
    int r = static_cast<int>(rng.next_index(n - 1));
    if (r >= p) ++r;
    const double angle = 6.283185307179586 * rng.next_double();
    kernels::apply_rotation_rows(q, std::min(p, r), std::max(p, r), std::cos(angle),
                                 std::sin(angle));
  }
  return q;
}

}  // namespace

TEST_CASE("parallel matmul is bit-identical to the serial reference") {
  for (int n : {1, 5, 67}) {
    const RealMatrix a = random_matrix(n, 10 + n);
    const RealMatrix b = random_matrix(n, 20 + n);
    CHECK(kernels::matmul(a, b) == ref::matmul(a, b));
  }
}

TEST_CASE("parallel complex matmul is bit-identical to the serial reference") {
  const ComplexMatrix a = random_cmatrix(33, 3);
  const ComplexMatrix b = random_cmatrix(33, 4);
  CHECK(kernels::cmatmul(a, b) == ref::cmatmul(a, b));
}

TEST_CASE("conj_diag_sym matches the reference and is exactly symmetric") {
  const int n = 41;
  const RealMatrix q = random_orthogonal(n, 5);
  std::vector<double> lam(n);
  SplitMix64 rng(6);
  for (double& x : lam) x = 10.0 * rng.next_double() - 5.0;

  const RealMatrix a = kernels::conj_diag_sym(q, lam);
  const RealMatrix r = ref::conj_diag(q, lam);
  CHECK(max_abs_diff(a, r) <= 1e-13);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) CHECK(a(i, j) == a(j, i));
  }
}

TEST_CASE("orth_residual agrees with the reference") {
  const RealMatrix q = random_orthogonal(29, 8);
  CHECK(kernels::orth_residual(q) == ref::orth_residual(q));
  CHECK(kernels::orth_residual(q) <= 1e-13);
  CHECK(kernels::orth_residual(RealMatrix::identity(7)) == 0.0);
}

TEST_CASE("apply_rotation_rows equals multiplication by the embedded rotation") {
  const int n = 9;
  const RealMatrix m = random_matrix(n, 12);
  const double u = std::cos(0.7), v = std::sin(0.7);

  RealMatrix rotated = m;
  kernels::apply_rotation_rows(rotated, 2, 5, u, v);

  RealMatrix t = RealMatrix::identity(n);
  t(2, 2) = u;
  t(2, 5) = -v;
  t(5, 2) = v;
  t(5, 5) = u;
  CHECK(max_abs_diff(rotated, ref::matmul(t, m)) <= 1e-15);
}

TEST_CASE("squared entries and stochastic residuals") {
  RealMatrix q(2);
  const double r = std::sqrt(0.5);
  q(0, 0) = r;
  q(0, 1) = -r;
  q(1, 0) = r;
  q(1, 1) = r;
  const RealMatrix s = kernels::squared_entries(q);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) CHECK(s(i, j) == doctest::Approx(0.5).epsilon(1e-15));
  }
  const auto [row_resid, col_resid] = kernels::stochastic_residuals(s);
  CHECK(row_resid <= 1e-15);
  CHECK(col_resid <= 1e-15);
}
