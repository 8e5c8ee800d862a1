#include "spectradiag/seq.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "spectradiag/compensated.hpp"

namespace spectradiag {

namespace {

bool sorted_desc(const std::vector<double>& v) {
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    if (v[i] < v[i + 1]) return false;
  }
  return true;
}

}  // namespace

RealSeq::RealSeq(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("sequence must be nonempty");
  for (double x : values_) {
    if (!std::isfinite(x)) throw std::invalid_argument("sequence entries must be finite");
  }
  sorted_desc_ = sorted_desc(values_);
}

double RealSeq::max_abs() const {
  double m = 0.0;
  for (double x : values_) m = std::max(m, std::abs(x));
  return m;
}

ComplexSeq::ComplexSeq(std::vector<std::complex<double>> values) : values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("sequence must be nonempty");
  for (const auto& z : values_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw std::invalid_argument("sequence entries must be finite");
    }
  }
}

bool ComplexSeq::all_real() const {
  for (const auto& z : values_) {
    if (z.imag() != 0.0) return false;
  }
  return true;
}

double ComplexSeq::max_abs() const {
  double m = 0.0;
  for (const auto& z : values_) m = std::max(m, std::abs(z));
  return m;
}

Permutation::Permutation(std::vector<std::size_t> map) : map_(std::move(map)) {
  std::vector<bool> seen(map_.size(), false);
  for (std::size_t i : map_) {
    if (i >= map_.size() || seen[i]) throw std::invalid_argument("not a bijection");
    seen[i] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> m(n);
  std::iota(m.begin(), m.end(), std::size_t{0});
  return Permutation(std::move(m));
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(map_.size());
  for (std::size_t i = 0; i < map_.size(); ++i) inv[map_[i]] = i;
  return Permutation(std::move(inv));
}

int MajorizationReport::first_violation() const {
  if (holds) return -1;
  const std::size_t n = slacks.size();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (slacks[k] < -tolerance_used) return static_cast<int>(k);
  }
  return static_cast<int>(n) - 1;
}

std::pair<RealSeq, Permutation> sort_desc(const RealSeq& seq) {
  const std::size_t n = seq.size();
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  // stable: ties keep original relative order, so downstream constructions
  // are deterministic
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return seq[a] > seq[b]; });
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = seq[idx[i]];
  return {RealSeq(std::move(out)), Permutation(std::move(idx))};
}

MajorizationReport check_majorization(const RealSeq& lambda, const RealSeq& d, double tol) {
  if (lambda.size() != d.size()) throw DimensionMismatchError();
  if (tol < 0.0) throw std::invalid_argument("tol must be >= 0");

  auto ls = lambda.values();
  auto ds = d.values();
  std::sort(ls.begin(), ls.end(), std::greater<>());
  std::sort(ds.begin(), ds.end(), std::greater<>());

  const std::size_t n = ls.size();
  MajorizationReport report;
  report.slacks.resize(n);
  report.tolerance_used = tol * std::max(1.0, lambda.max_abs());

  CompensatedSum sum_l, sum_d;
  for (std::size_t k = 0; k < n; ++k) {
    sum_l.add(ls[k]);
    sum_d.add(ds[k]);
    report.slacks[k] = sum_l.value() - sum_d.value();
  }
  report.trace_gap = report.slacks[n - 1];

  bool ok = std::abs(report.trace_gap) <= report.tolerance_used;
  for (std::size_t k = 0; ok && k + 1 < n; ++k) {
    ok = report.slacks[k] >= -report.tolerance_used;
  }
  report.holds = ok;
  return report;
}

bool trace_match(const ComplexSeq& lambda, const ComplexSeq& d, double tol) {
  if (lambda.size() != d.size()) throw DimensionMismatchError();
  if (tol < 0.0) throw std::invalid_argument("tol must be >= 0");

  ComplexCompensatedSum sum_l, sum_d;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    sum_l.add(lambda[i]);
    sum_d.add(d[i]);
  }
  const auto sl = sum_l.value();
  const auto sd = sum_d.value();
  return std::abs(sl - sd) <= tol * std::max(1.0, std::abs(sl));
}

}  // namespace spectradiag
