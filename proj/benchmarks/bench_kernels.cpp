// Timing comparison of the OpenMP kernels against the serial reference
// implementations, plus an end-to-end construction timing.
//
//   ./bench_kernels [max_n]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "spectradiag/gen.hpp"
#include "spectradiag/horn.hpp"
#include "spectradiag/kernels.hpp"
#include "spectradiag/ref_kernels.hpp"
#include "spectradiag/verify.hpp"

using namespace spectradiag;

namespace {

double now() {
  return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

template <typename F>
double best_of(int reps, F&& f) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const double t0 = now();
    f();
    best = std::min(best, now() - t0);
  }
  return best;
}

RealMatrix random_matrix(int n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  RealMatrix m(n);
  for (double& x : m.data()) x = 2.0 * rng.next_double() - 1.0;
  return m;
}

}  // namespace

int main(int argc, char** argv) {
  const int max_n = argc > 1 ? std::atoi(argv[1]) : 512;
#ifdef _OPENMP
  std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
  std::printf("openmp: disabled at build time\n");
#endif

  std::printf("\n%-14s %6s %12s %12s %9s\n", "kernel", "n", "serial [s]", "omp [s]", "speedup");
  for (int n = 128; n <= max_n; n *= 2) {
    const RealMatrix a = random_matrix(n, 7);
    const RealMatrix b = random_matrix(n, 11);
    volatile double sink = 0.0;

    const double ts = best_of(3, [&] { sink = ref::matmul(a, b)(0, 0); });
    const double tp = best_of(3, [&] { sink = kernels::matmul(a, b)(0, 0); });
    std::printf("%-14s %6d %12.4f %12.4f %8.2fx\n", "matmul", n, ts, tp, ts / tp);

    std::vector<double> lam(n);
    for (int i = 0; i < n; ++i) lam[i] = static_cast<double>(n - i);
    const double cs = best_of(3, [&] { sink = ref::conj_diag(a, lam)(0, 0); });
    const double cp = best_of(3, [&] { sink = kernels::conj_diag_sym(a, lam)(0, 0); });
    std::printf("%-14s %6d %12.4f %12.4f %8.2fx\n", "conj_diag", n, cs, cp, cs / cp);
    (void)sink;
  }

  std::printf("\nend-to-end horn construction + verification\n");
  for (int n : {100, 200, 400}) {
    GenConfig cfg;
    cfg.seed = 42;
    cfg.n = n;
    const RealSeq lambda = random_spectrum(cfg);
    GenConfig dcfg = cfg;
    dcfg.seed = 43;
    const RealSeq d = random_majorized_diag(lambda, dcfg);

    const double t0 = now();
    const auto cert = horn_construct(lambda, d, 1e-12);
    const double t1 = now();
    const auto report = verify_horn(cert);
    const double t2 = now();
    std::printf("n=%4d  construct %.4fs  verify %.4fs  pass=%d\n", n, t1 - t0, t2 - t1,
                report.pass ? 1 : 0);
  }
  return 0;
}
