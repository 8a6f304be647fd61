// Throughput comparison of the serial and OpenMP trial runners on a GUE
// eigendecomposition workload.

#include <cstdio>
#include <cstdlib>
#include <string>

#include "rmt/ensemble.hpp"
#include "rmt/harness.hpp"
#include "rmt/spectral.hpp"

int main(int argc, char** argv) {
  int N = 300;
  int trials = 40;
  int threads = 4;
  if (argc > 1) N = std::atoi(argv[1]);
  if (argc > 2) trials = std::atoi(argv[2]);
  if (argc > 3) threads = std::atoi(argv[3]);

  const auto spec = rmt::make_gue(N);
  auto task = [&](int, std::uint64_t seed) {
    const auto sample = rmt::sample_matrix(spec, seed);
    const auto sd = rmt::eigendecompose(sample.H, true);
    return std::vector<double>{sd.lambda(0), sd.lambda(N - 1),
                               rmt::delocalization_stat(sd)};
  };

  rmt::harness::RunOptions serial{trials, 1, 42};
  rmt::harness::RunOptions parallel{trials, threads, 42};

  const auto r1 = rmt::harness::run_trials(serial, task);
  const auto r2 = rmt::harness::run_trials(parallel, task);

  bool identical = r1.samples == r2.samples && r1.trial_index == r2.trial_index;
  std::printf("N=%d trials=%d\n", N, trials);
  std::printf("serial      : %8.3f s  (%7.2f ms/trial)\n", r1.seconds,
              1e3 * r1.seconds_per_trial);
  std::printf("threads=%-3d : %8.3f s  (%7.2f ms/trial)  speedup %.2fx\n", threads,
              r2.seconds, 1e3 * r2.seconds_per_trial, r1.seconds / r2.seconds);
  std::printf("aggregates identical: %s\n", identical ? "yes" : "NO");
  return identical ? 0 : 1;
}
