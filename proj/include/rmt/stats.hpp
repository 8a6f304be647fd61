#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace rmt::stats {

double mean(const std::vector<double>& xs);

// Sup-distance between the empirical CDFs, exact via a sorted merge.
// Throws on an empty sample.
double ks_two_sample(std::vector<double> a, std::vector<double> b);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

// Percentile bootstrap for statistic(samples); deterministic given seed.
Interval bootstrap_ci(const std::vector<double>& samples,
                      const std::function<double(const std::vector<double>&)>& statistic,
                      int resamples, double level, std::uint64_t seed);

Interval bootstrap_mean_ci(const std::vector<double>& samples, int resamples,
                           double level, std::uint64_t seed);

// Wilson score interval for a binomial proportion.
Interval binomial_ci(int successes, int trials, double level);

// Inverse standard normal CDF (Acklam's rational approximation, |err| < 1.2e-9).
double normal_quantile(double p);

}  // namespace rmt::stats
