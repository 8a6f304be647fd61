#include "rmt/comparison.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "rmt/resolvent.hpp"
#include "rmt/rng.hpp"
#include "rmt/semicircle.hpp"

namespace rmt::comparison {
namespace {

using Complex = std::complex<double>;

void check_entry_arrays(const EnsembleSpec& spec,
                        const std::vector<Complex>& v_entries,
                        const std::vector<Complex>& w_entries) {
  const std::size_t want = upper_triangle_count(spec.N());
  if (v_entries.size() != want || w_entries.size() != want)
    throw std::invalid_argument("entry array length does not match N(N+1)/2");
}

}  // namespace

int SwapSchedule::forward(int i, int j) const {
  if (i < 1 || j < i || j > N) throw std::out_of_range("SwapSchedule::forward: need 1 <= i <= j <= N");
  return static_cast<int>(upper_index(N, i - 1, j - 1)) + 1;
}

std::pair<int, int> SwapSchedule::inverse(int gamma) const {
  if (gamma < 1 || gamma > gamma_max)
    throw std::out_of_range("SwapSchedule::inverse: gamma out of range");
  const auto [i, j] = upper_index_inverse(N, static_cast<std::size_t>(gamma - 1));
  return {i + 1, j + 1};
}

SwapSchedule ordering_map(int N) {
  if (N < 1) throw std::invalid_argument("ordering_map: N >= 1 required");
  return {N, static_cast<int>(upper_triangle_count(N))};
}

Eigen::MatrixXcd hybrid_matrix(const EnsembleSpec& spec,
                               const std::vector<Complex>& v_entries,
                               const std::vector<Complex>& w_entries, int gamma) {
  check_entry_arrays(spec, v_entries, w_entries);
  const int gamma_max = static_cast<int>(v_entries.size());
  if (gamma < 0 || gamma > gamma_max)
    throw std::out_of_range("hybrid_matrix: gamma out of range");
  std::vector<Complex> mixed(v_entries.begin(), v_entries.end());
  std::copy(w_entries.begin(), w_entries.begin() + gamma, mixed.begin());
  return assemble_matrix(spec, mixed);
}

std::vector<double> telescope_decompose(
    const EnsembleSpec& spec, const std::vector<Complex>& v_entries,
    const std::vector<Complex>& w_entries,
    const std::function<double(const Eigen::MatrixXcd&)>& F) {
  check_entry_arrays(spec, v_entries, w_entries);
  const int gamma_max = static_cast<int>(v_entries.size());
  std::vector<Complex> mixed(v_entries.begin(), v_entries.end());
  std::vector<double> d(gamma_max);
  double prev = F(assemble_matrix(spec, mixed));
  for (int gamma = 1; gamma <= gamma_max; ++gamma) {
    mixed[gamma - 1] = w_entries[gamma - 1];
    const double next = F(assemble_matrix(spec, mixed));
    d[gamma - 1] = prev - next;
    prev = next;
  }
  return d;
}

ExpansionRemainder resolvent_expansion_remainder(
    const EnsembleSpec& spec, const std::vector<Complex>& v_entries,
    const std::vector<Complex>& w_entries, int gamma, Complex z, int order) {
  check_entry_arrays(spec, v_entries, w_entries);
  if (order < 1 || order > 5)
    throw std::invalid_argument("resolvent_expansion_remainder: order must be 1..5");
  if (!(z.imag() > 0.0))
    throw std::invalid_argument("resolvent_expansion_remainder: Im z must be positive");

  const int N = spec.N();
  const SwapSchedule sched = ordering_map(N);
  const auto [a, b] = sched.inverse(gamma);
  const Eigen::MatrixXcd H = hybrid_matrix(spec, v_entries, w_entries, gamma - 1);

  Eigen::MatrixXcd Q = H;
  Q(a - 1, b - 1) = 0.0;
  Q(b - 1, a - 1) = 0.0;
  const double sqrt_n = std::sqrt(static_cast<double>(N));
  Eigen::MatrixXcd V = Eigen::MatrixXcd::Zero(N, N);
  V(a - 1, b - 1) = sqrt_n * H(a - 1, b - 1);
  V(b - 1, a - 1) = sqrt_n * H(b - 1, a - 1);

  const Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(N, N);
  const Eigen::MatrixXcd R = (Q - z * I).partialPivLu().solve(I);
  const Eigen::MatrixXcd S = (H - z * I).partialPivLu().solve(I);

  ExpansionRemainder out;
  out.a = a;
  out.b = b;
  const double r_norm = R.norm();
  const double s_norm = S.norm();
  const double v_norm = V.norm();

  Eigen::MatrixXcd term = R;   // (-N^{-1/2})^m (RV)^m R
  Eigen::MatrixXcd acc = R;    // partial sum through order m
  for (int m = 1; m <= order; ++m) {
    term = (-1.0 / sqrt_n) * (R * (V * term));
    acc += term;
    out.remainder.push_back((S - acc).cwiseAbs().maxCoeff());
    out.bound.push_back(std::pow(r_norm * v_norm / sqrt_n, m + 1) * s_norm);
  }
  return out;
}

GfctResult gfct_statistic(const EnsembleSpec& ensemble_v, const EnsembleSpec& ensemble_w,
                          const std::function<double(double)>& F, double E1, double E2,
                          double eps, int trials, std::uint64_t root_seed) {
  if (ensemble_v.N() != ensemble_w.N())
    throw std::invalid_argument("gfct_statistic: ensemble sizes differ");
  if (trials < 1) throw std::invalid_argument("gfct_statistic: trials >= 1 required");
  const int N = ensemble_v.N();
  const double window = std::pow(static_cast<double>(N), -2.0 / 3.0 + eps);
  if (std::abs(E1 + 2.0) > window * (1.0 + 1e-9) ||
      std::abs(E2 + 2.0) > window * (1.0 + 1e-9))
    throw std::invalid_argument("gfct_statistic: E1, E2 must lie within N^{-2/3+eps} of -2");
  const double eta = std::pow(static_cast<double>(N), -2.0 / 3.0 - eps);

  GfctResult out;
  out.trials = trials;
  out.reference_scale = std::pow(static_cast<double>(N), -1.0 / 6.0);
  out.samples_v.resize(trials);
  out.samples_w.resize(trials);

  auto statistic = [&](const EnsembleSpec& ens, std::uint64_t seed) {
    const Eigen::MatrixXcd H = assemble_matrix(ens, draw_entry_array(ens, seed));
    const SpectralData spec = eigendecompose(H, false);
    // N int Im m dy = pi * smoothed count on [E1, E2].
    const double x = std::numbers::pi * resolvent::smoothed_count(spec, E1, E2, eta);
    return F(x);
  };

#pragma omp parallel for schedule(dynamic)
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t seed = rng::derive_seed(root_seed, t, "gfct");
    out.samples_v[t] = statistic(ensemble_v, seed);
    out.samples_w[t] = statistic(ensemble_w, seed);
  }

  out.mean_v = stats::mean(out.samples_v);
  out.mean_w = stats::mean(out.samples_w);
  out.difference = out.mean_v - out.mean_w;
  std::vector<double> diffs(trials);
  for (int t = 0; t < trials; ++t) diffs[t] = out.samples_v[t] - out.samples_w[t];
  out.difference_ci = stats::bootstrap_mean_ci(diffs, 1000, 0.95, root_seed);
  return out;
}

namespace {

struct ObservableSamples {
  std::vector<double> values;  // successful trials in trial order
  int skipped = 0;
};

ObservableSamples collect_observable(const EnsembleSpec& ens, const ObservableSpec& obs,
                                     const std::vector<double>& gamma, int trials,
                                     std::uint64_t root_seed, std::string_view tag,
                                     int parallelism) {
  const int N = ens.N();
  for (const auto& term : obs.eigenvalue_terms)
    if (term.beta < 1 || term.beta > N)
      throw std::out_of_range("universality_experiment: eigenvalue index out of range");
  for (const auto& term : obs.eigenvector_terms)
    if (term.alpha < 1 || term.alpha > N || term.i < 1 || term.i > N || term.j < 1 ||
        term.j > N)
      throw std::out_of_range("universality_experiment: eigenvector index out of range");

  std::vector<double> values(trials);
  std::vector<char> ok(trials, 0);
#pragma omp parallel for schedule(dynamic) num_threads(parallelism)
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t seed = rng::derive_seed(root_seed, t, tag);
    const Eigen::MatrixXcd H = assemble_matrix(ens, draw_entry_array(ens, seed));
    const SpectralData spec = eigendecompose(H, true);
    if (!spec.residual_ok) continue;
    std::vector<double> args;
    for (const auto& term : obs.eigenvalue_terms)
      args.push_back(scaled_eigenvalue(spec, term.beta, term.region, gamma));
    for (const auto& term : obs.eigenvector_terms) {
      const Complex o = eigenvector_overlap(spec, term.alpha, term.i, term.j);
      args.push_back(o.real());
      if (term.i != term.j) args.push_back(o.imag());
    }
    values[t] = obs.theta(args);
    ok[t] = 1;
  }

  ObservableSamples out;
  for (int t = 0; t < trials; ++t) {
    if (ok[t])
      out.values.push_back(values[t]);
    else
      ++out.skipped;
  }
  return out;
}

stats::Interval two_sample_mean_diff_ci(const std::vector<double>& a,
                                        const std::vector<double>& b,
                                        std::uint64_t seed) {
  const int resamples = 1000;
  rng::Stream stream(rng::derive_seed(seed, 0, "two-sample-boot"));
  std::vector<double> diffs(resamples);
  auto resample_mean = [&](const std::vector<double>& xs) {
    double acc = 0.0;
    for (std::size_t k = 0; k < xs.size(); ++k) {
      const std::size_t idx = std::min(
          xs.size() - 1, static_cast<std::size_t>(stream.next_uniform() * xs.size()));
      acc += xs[idx];
    }
    return acc / xs.size();
  };
  for (int r = 0; r < resamples; ++r) diffs[r] = resample_mean(a) - resample_mean(b);
  std::sort(diffs.begin(), diffs.end());
  return {diffs[static_cast<int>(0.025 * (resamples - 1))],
          diffs[static_cast<int>(0.975 * (resamples - 1))]};
}

}  // namespace

ComparisonReport universality_experiment(const EnsembleFactory& ensemble_v,
                                         const EnsembleFactory& ensemble_w,
                                         const ObservableSpec& obs,
                                         const std::vector<int>& n_list, int trials,
                                         std::uint64_t root_seed, int parallelism) {
  if (n_list.empty()) throw std::invalid_argument("universality_experiment: empty N list");
  if (trials < 1) throw std::invalid_argument("universality_experiment: trials >= 1 required");
  ComparisonReport report;
  report.root_seed = root_seed;
  report.trials = trials;

  for (int N : n_list) {
    const std::vector<double> gamma = semicircle::classical_locations(N);
    const std::uint64_t n_seed = rng::derive_seed(root_seed, static_cast<std::uint64_t>(N), "per-N");
    const ObservableSamples sv =
        collect_observable(ensemble_v(N), obs, gamma, trials, n_seed, "univ-v", parallelism);
    const ObservableSamples sw =
        collect_observable(ensemble_w(N), obs, gamma, trials, n_seed, "univ-w", parallelism);

    UniversalityPerN row;
    row.N = N;
    row.trials = trials;
    row.skipped_v = sv.skipped;
    row.skipped_w = sw.skipped;
    row.samples_v = sv.values;
    row.samples_w = sw.values;
    row.ks = stats::ks_two_sample(sv.values, sw.values);
    row.mean_difference = stats::mean(sv.values) - stats::mean(sw.values);
    row.difference_ci = two_sample_mean_diff_ci(sv.values, sw.values, n_seed);
    if (sv.skipped + sw.skipped >= 0.05 * 2.0 * trials) report.skip_flagged = true;
    report.per_n.push_back(std::move(row));
  }
  return report;
}

std::vector<bool> repulsion_hits(const SpectralData& spec, SpectralRegion region,
                                 double alpha_exp, const std::vector<double>& e_grid) {
  if (!(alpha_exp > 0.0)) throw std::invalid_argument("repulsion_hits: alpha_exp must be positive");
  const double N = spec.N();
  const double w = region == SpectralRegion::edge
                       ? std::pow(N, -2.0 / 3.0 - alpha_exp)
                       : std::pow(N, -1.0 - alpha_exp);
  std::vector<bool> hits;
  hits.reserve(e_grid.size());
  for (double E : e_grid)
    hits.push_back(count_eigenvalues(spec, E - w, E + w) >= 2);
  return hits;
}

RepulsionResult repulsion_estimate(const EnsembleSpec& ensemble, SpectralRegion region,
                                   double alpha_exp, const std::vector<double>& e_grid,
                                   int trials, std::uint64_t root_seed, int parallelism) {
  if (trials < 1) throw std::invalid_argument("repulsion_estimate: trials >= 1 required");
  if (e_grid.empty()) throw std::invalid_argument("repulsion_estimate: empty grid");
  const int N = ensemble.N();
  const double w = region == SpectralRegion::edge
                       ? std::pow(static_cast<double>(N), -2.0 / 3.0 - alpha_exp)
                       : std::pow(static_cast<double>(N), -1.0 - alpha_exp);

  const int points = static_cast<int>(e_grid.size());
  std::vector<int> hit_count(points, 0);
  int union_count = 0;
#pragma omp parallel for schedule(dynamic) num_threads(parallelism) \
    reduction(+ : union_count)
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t seed = rng::derive_seed(root_seed, t, "repulsion");
    const Eigen::MatrixXcd H = assemble_matrix(ensemble, draw_entry_array(ensemble, seed));
    const SpectralData spec = eigendecompose(H, false);
    const std::vector<bool> hits = repulsion_hits(spec, region, alpha_exp, e_grid);
    bool any = false;
    for (int k = 0; k < points; ++k) {
      if (hits[k]) {
#pragma omp atomic
        ++hit_count[k];
        any = true;
      }
    }
    if (any) ++union_count;
  }

  RepulsionResult out;
  out.trials = trials;
  out.reference = std::pow(static_cast<double>(N), -alpha_exp);
  for (int k = 0; k < points; ++k) {
    RepulsionPoint pt;
    pt.E = e_grid[k];
    pt.window_half_width = w;
    pt.probability = static_cast<double>(hit_count[k]) / trials;
    pt.ci = stats::binomial_ci(hit_count[k], trials, 0.95);
    out.points.push_back(pt);
  }
  out.union_probability = static_cast<double>(union_count) / trials;
  out.union_ci = stats::binomial_ci(union_count, trials, 0.95);
  return out;
}

}  // namespace rmt::comparison
