#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "spectradiag/seq.hpp"

namespace spectradiag {

/// splitmix64. The algorithm is pinned here rather than delegated to a
/// standard-library engine so that seeded outputs are bit-reproducible
/// across platforms and language ports:
///   state += 0x9E3779B97F4A7C15
///   z = state; z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   return z ^ (z >> 31)
/// Doubles are built as (u64 >> 11) * 2^-53, uniform in [0, 1).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();
  double next_double();
  /// Uniform index in {0,...,bound-1} (modulo reduction; bias is
  /// irrelevant at test scale and keeps the recipe portable).
  std::size_t next_index(std::size_t bound);

 private:
  std::uint64_t state_;
};

struct GenConfig {
  std::uint64_t seed = 1;
  int n = 8;
  double lo = -10.0;
  double hi = 10.0;
  int mix_count = 8;  // permutation matrices averaged by random_majorized_diag

  void validate() const;  // lo < hi, n >= 1, mix_count >= 1
};

/// n values uniform in [lo, hi], sorted descending.
RealSeq random_spectrum(const GenConfig& cfg);

/// D = S Lambda with S the average of mix_count seeded random permutation
/// matrices, so Lambda majorizes D by construction. Returned in the mixed
/// (unsorted) order.
RealSeq random_majorized_diag(const RealSeq& lambda, const GenConfig& cfg);

/// Random pair with the sums matched exactly as computed: the last entry
/// of D is set to the compensated sum of Lambda minus the compensated sum
/// of the other entries.
std::pair<ComplexSeq, ComplexSeq> trace_matched_pair(const GenConfig& cfg, bool complex_flag);

/// Scales a nonnegative raw spectrum to sum n and pairs it with the
/// all-ones diagonal (unit-diagonal matrices with prescribed spectrum).
std::pair<RealSeq, RealSeq> corr_preset(const RealSeq& lambda_raw);

/// Fisher-Yates shuffle of {0,...,n-1} driven by rng.
std::vector<std::size_t> random_permutation(std::size_t n, SplitMix64& rng);

}  // namespace spectradiag
