#pragma once

#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include "spectradiag/errors.hpp"

namespace spectradiag {

/// Finite real sequence of length >= 1. Every entry is finite; the
/// descending-sortedness flag is computed on construction.
class RealSeq {
 public:
  explicit RealSeq(std::vector<double> values);

  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  const std::vector<double>& values() const { return values_; }
  bool is_sorted_desc() const { return sorted_desc_; }

  /// Infinity norm of the sequence.
  double max_abs() const;

  friend bool operator==(const RealSeq&, const RealSeq&) = default;

 private:
  std::vector<double> values_;
  bool sorted_desc_;
};

/// Finite complex sequence of length >= 1.
class ComplexSeq {
 public:
  explicit ComplexSeq(std::vector<std::complex<double>> values);

  std::size_t size() const { return values_.size(); }
  std::complex<double> operator[](std::size_t i) const { return values_[i]; }
  const std::vector<std::complex<double>>& values() const { return values_; }

  /// True when every imaginary part is exactly zero.
  bool all_real() const;
  /// Largest modulus.
  double max_abs() const;

  friend bool operator==(const ComplexSeq&, const ComplexSeq&) = default;

 private:
  std::vector<std::complex<double>> values_;
};

/// Bijection on {0,...,n-1} stored as an index array; p[i] is the source
/// index feeding output slot i.
class Permutation {
 public:
  explicit Permutation(std::vector<std::size_t> map);
  static Permutation identity(std::size_t n);

  std::size_t size() const { return map_.size(); }
  std::size_t operator[](std::size_t i) const { return map_[i]; }
  const std::vector<std::size_t>& map() const { return map_; }

  Permutation inverse() const;

  /// y[i] = x[p[i]].
  template <typename T>
  std::vector<T> apply(const std::vector<T>& x) const {
    std::vector<T> y(x.size());
    for (std::size_t i = 0; i < map_.size(); ++i) y[i] = x[map_[i]];
    return y;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> map_;
};

/// Result of a majorization check. Slacks are partial-sum gaps
/// slack[k] = sum of k+1 largest lambdas minus sum of k+1 largest d's,
/// computed with compensated summation on internally sorted copies.
struct MajorizationReport {
  bool holds = false;
  std::vector<double> slacks;
  double trace_gap = 0.0;       // == slacks.back()
  double tolerance_used = 0.0;  // tol * max(1, ||lambda||_inf)

  /// Smallest prefix index with slack below -tolerance_used, or the last
  /// index when only the full-sum condition fails; -1 when holds.
  int first_violation() const;
};

/// Stable descending sort with permutation tracking: out[i] = seq[p[i]].
std::pair<RealSeq, Permutation> sort_desc(const RealSeq& seq);

/// Majorization test lambda > d (both inputs may be in any order).
MajorizationReport check_majorization(const RealSeq& lambda, const RealSeq& d, double tol);

/// True iff |sum(lambda) - sum(d)| <= tol * max(1, |sum(lambda)|).
bool trace_match(const ComplexSeq& lambda, const ComplexSeq& d, double tol);

}  // namespace spectradiag
