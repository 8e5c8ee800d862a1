#pragma once

#include <span>
#include <utility>

#include "spectradiag/dense.hpp"

// Dense kernels used by the constructors. Hot loops are OpenMP-parallel;
// every output element is written by exactly one thread with a fixed serial
// inner order, so results are bit-identical at any thread count. The serial
// twins live in ref_kernels.hpp and back the verification oracles.
namespace spectradiag::kernels {

RealMatrix matmul(const RealMatrix& a, const RealMatrix& b);

/// (Q diag(lam) Q^T + transpose)/2 -- symmetrized conjugation.
RealMatrix conj_diag_sym(const RealMatrix& q, std::span<const double> lam);

/// Elementwise squares.
RealMatrix squared_entries(const RealMatrix& q);

/// max |(Q^T Q - I)_ij|
double orth_residual(const RealMatrix& q);

/// Left-multiply m by the plane rotation with block [[u,-v],[v,u]] at rows (p,q).
void apply_rotation_rows(RealMatrix& m, int p, int q, double u, double v);

/// (max row-sum deviation from 1, max column-sum deviation from 1).
std::pair<double, double> stochastic_residuals(const RealMatrix& s);

ComplexMatrix cmatmul(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace spectradiag::kernels
