#include "rmt/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "rmt/rng.hpp"

namespace rmt::stats {

double mean(const std::vector<double>& xs) {
  if (xs.empty()) throw std::invalid_argument("mean: empty sample");
  return std::accumulate(xs.begin(), xs.end(), 0.0) / xs.size();
}

double ks_two_sample(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("ks_two_sample: empty sample");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  std::size_t ia = 0, ib = 0;
  double d = 0.0;
  while (ia < a.size() && ib < b.size()) {
    const double x = std::min(a[ia], b[ib]);
    while (ia < a.size() && a[ia] <= x) ++ia;
    while (ib < b.size() && b[ib] <= x) ++ib;
    d = std::max(d, std::abs(ia / na - ib / nb));
  }
  return d;
}

Interval bootstrap_ci(const std::vector<double>& samples,
                      const std::function<double(const std::vector<double>&)>& statistic,
                      int resamples, double level, std::uint64_t seed) {
  if (samples.empty()) throw std::invalid_argument("bootstrap_ci: empty sample");
  if (resamples < 200) throw std::invalid_argument("bootstrap_ci: resamples < 200");
  if (!(level > 0.0 && level < 1.0))
    throw std::invalid_argument("bootstrap_ci: level outside (0,1)");
  const std::size_t n = samples.size();
  rng::Stream stream(rng::derive_seed(seed, 0, "bootstrap"));
  std::vector<double> stats(resamples);
  std::vector<double> resample(n);
  for (int r = 0; r < resamples; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t idx =
          std::min(n - 1, static_cast<std::size_t>(stream.next_uniform() * n));
      resample[k] = samples[idx];
    }
    stats[r] = statistic(resample);
  }
  std::sort(stats.begin(), stats.end());
  const double alpha = 1.0 - level;
  auto pick = [&](double q) {
    const double pos = q * (resamples - 1);
    const std::size_t lo = static_cast<std::size_t>(pos);
    const std::size_t hi = std::min<std::size_t>(lo + 1, resamples - 1);
    const double frac = pos - lo;
    return stats[lo] * (1.0 - frac) + stats[hi] * frac;
  };
  return {pick(alpha / 2.0), pick(1.0 - alpha / 2.0)};
}

Interval bootstrap_mean_ci(const std::vector<double>& samples, int resamples,
                           double level, std::uint64_t seed) {
  return bootstrap_ci(samples, [](const std::vector<double>& xs) { return mean(xs); },
                      resamples, level, seed);
}

Interval binomial_ci(int successes, int trials, double level) {
  if (trials <= 0 || successes < 0 || successes > trials)
    throw std::invalid_argument("binomial_ci: bad counts");
  const double z = normal_quantile(0.5 + level / 2.0);
  const double n = trials;
  const double p = successes / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (p + z2 / (2.0 * n)) / denom;
  const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("normal_quantile: p outside (0,1)");
  static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                             -2.759285104469687e+02, 1.383577518672690e+02,
                             -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                             -1.556989798598866e+02, 6.680131188771972e+01,
                             -1.328068155288572e+01};
  static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                             -2.400758277161838e+00, -2.549732539343734e+00,
                             4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                             2.445134137142996e+00, 3.754408661907416e+00};
  const double plow = 0.02425;
  if (p < plow) {
    const double q = std::sqrt(-2.0 * std::log(p));
    return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  if (p > 1.0 - plow) return -normal_quantile(1.0 - p);
  const double q = p - 0.5;
  const double r = q * q;
  return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
         (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

}  // namespace rmt::stats
