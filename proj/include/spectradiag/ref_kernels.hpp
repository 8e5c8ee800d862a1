#pragma once

#include <span>

#include "spectradiag/dense.hpp"

// Serial reference kernels. These back the verification oracles and the
// kernel regression tests; they share no code with spectradiag::kernels.
namespace spectradiag::ref {

RealMatrix matmul(const RealMatrix& a, const RealMatrix& b);

/// Plain Q diag(lam) Q^T, no symmetrization.
RealMatrix conj_diag(const RealMatrix& q, std::span<const double> lam);

double orth_residual(const RealMatrix& q);

ComplexMatrix cmatmul(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace spectradiag::ref
