#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

namespace spectradiag {

/// Dense square matrix, row-major storage.
template <typename T>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(int n, T fill = T{})
      : n_(n), data_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), fill) {}

  static SquareMatrix identity(int n) {
    SquareMatrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = T{1};
    return m;
  }

  int n() const { return n_; }

  T& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * n_ + j]; }
  const T& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * n_ + j]; }

  T* row(int i) { return data_.data() + static_cast<std::size_t>(i) * n_; }
  const T* row(int i) const { return data_.data() + static_cast<std::size_t>(i) * n_; }

  std::vector<T>& data() { return data_; }
  const std::vector<T>& data() const { return data_; }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  int n_ = 0;
  std::vector<T> data_;
};

using RealMatrix = SquareMatrix<double>;
using ComplexMatrix = SquareMatrix<std::complex<double>>;

inline double max_abs(const RealMatrix& a) {
  double m = 0.0;
  for (double x : a.data()) m = std::max(m, std::abs(x));
  return m;
}

inline double max_abs(const ComplexMatrix& a) {
  double m = 0.0;
  for (const auto& x : a.data()) m = std::max(m, std::abs(x));
  return m;
}

template <typename T>
double max_abs_diff(const SquareMatrix<T>& a, const SquareMatrix<T>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
  return m;
}

inline ComplexMatrix widen(const RealMatrix& a) {
  ComplexMatrix c(a.n());
  for (std::size_t i = 0; i < a.data().size(); ++i) c.data()[i] = {a.data()[i], 0.0};
  return c;
}

}  // namespace spectradiag
