#include "spectradiag/gen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "spectradiag/compensated.hpp"

namespace spectradiag {

std::uint64_t SplitMix64::next_u64() {
  state_ += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double SplitMix64::next_double() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::size_t SplitMix64::next_index(std::size_t bound) { return next_u64() % bound; }

void GenConfig::validate() const {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (!(lo < hi)) throw std::invalid_argument("value range must satisfy lo < hi");
  if (mix_count < 1) throw std::invalid_argument("mix_count must be >= 1");
}

RealSeq random_spectrum(const GenConfig& cfg) {
  cfg.validate();
  SplitMix64 rng(cfg.seed);
  std::vector<double> v(cfg.n);
  for (double& x : v) x = cfg.lo + rng.next_double() * (cfg.hi - cfg.lo);
  std::sort(v.begin(), v.end(), std::greater<>());
  return RealSeq(std::move(v));
}

std::vector<std::size_t> random_permutation(std::size_t n, SplitMix64& rng) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  for (std::size_t i = n; i > 1; --i) {
    std::swap(p[i - 1], p[rng.next_index(i)]);
  }
  return p;
}

RealSeq random_majorized_diag(const RealSeq& lambda, const GenConfig& cfg) {
  cfg.validate();
  const std::size_t n = lambda.size();
  SplitMix64 rng(cfg.seed);

  // D = S Lambda with S an average of permutation matrices: bistochastic by
  // construction, so Lambda majorizes D.
  std::vector<double> sums(n, 0.0);
  for (int t = 0; t < cfg.mix_count; ++t) {
    const auto p = random_permutation(n, rng);
    for (std::size_t i = 0; i < n; ++i) sums[i] += lambda[p[i]];
  }
  for (double& x : sums) x /= static_cast<double>(cfg.mix_count);
  return RealSeq(std::move(sums));
}

std::pair<ComplexSeq, ComplexSeq> trace_matched_pair(const GenConfig& cfg, bool complex_flag) {
  cfg.validate();
  SplitMix64 rng(cfg.seed);
  const auto draw = [&]() -> std::complex<double> {
    const double re = cfg.lo + rng.next_double() * (cfg.hi - cfg.lo);
    const double im = complex_flag ? cfg.lo + rng.next_double() * (cfg.hi - cfg.lo) : 0.0;
    return {re, im};
  };

  const std::size_t n = static_cast<std::size_t>(cfg.n);
  std::vector<std::complex<double>> lambda(n);
  for (auto& z : lambda) z = draw();
  std::vector<std::complex<double>> d(n);
  for (std::size_t i = 0; i + 1 < n; ++i) d[i] = draw();

  ComplexCompensatedSum sum_l, sum_d;
  for (const auto& z : lambda) sum_l.add(z);
  for (std::size_t i = 0; i + 1 < n; ++i) sum_d.add(d[i]);
  d[n - 1] = sum_l.value() - sum_d.value();

  return {ComplexSeq(std::move(lambda)), ComplexSeq(std::move(d))};
}

std::pair<RealSeq, RealSeq> corr_preset(const RealSeq& lambda_raw) {
  const std::size_t n = lambda_raw.size();
  CompensatedSum total;
  for (std::size_t i = 0; i < n; ++i) {
    if (lambda_raw[i] < 0.0) throw NotCorrelationSpectrumError();
    total.add(lambda_raw[i]);
  }
  if (!(total.value() > 0.0)) throw NotCorrelationSpectrumError();

  const double scale = static_cast<double>(n) / total.value();
  std::vector<double> scaled(n);
  for (std::size_t i = 0; i < n; ++i) scaled[i] = lambda_raw[i] * scale;
  RealSeq lambda(std::move(scaled));
  RealSeq ones(std::vector<double>(n, 1.0));

  // For a descending sequence summing to n every prefix average is >= 1, so
  // this can only fire if the input slipped past the sign checks above.
  if (!check_majorization(lambda, ones, 1e-12).holds) throw NotCorrelationSpectrumError();
  return {std::move(lambda), std::move(ones)};
}

}  // namespace spectradiag
