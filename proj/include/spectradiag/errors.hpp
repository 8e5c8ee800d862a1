#pragma once

#include <stdexcept>

namespace spectradiag {

struct DimensionMismatchError : std::invalid_argument {
  DimensionMismatchError() : std::invalid_argument("dimension mismatch") {}
};

// first_violation is the smallest prefix index whose slack is negative,
// or n-1 when only the full-sum condition fails.
struct MajorizationError : std::domain_error {
  explicit MajorizationError(int first_violation_)
      : std::domain_error("majorization violated"), first_violation(first_violation_) {}
  int first_violation;
};

struct TraceMismatchError : std::domain_error {
  TraceMismatchError() : std::domain_error("trace mismatch") {}
};

struct IntervalViolationError : std::domain_error {
  IntervalViolationError() : std::domain_error("interval violation") {}
};

struct NotSymmetricError : std::invalid_argument {
  NotSymmetricError() : std::invalid_argument("not symmetric") {}
};

struct NoConvergenceError : std::runtime_error {
  explicit NoConvergenceError(double off_norm_)
      : std::runtime_error("no convergence"), off_norm(off_norm_) {}
  double off_norm;
};

struct NotCorrelationSpectrumError : std::domain_error {
  NotCorrelationSpectrumError() : std::domain_error("not a correlation spectrum") {}
};

}  // namespace spectradiag
