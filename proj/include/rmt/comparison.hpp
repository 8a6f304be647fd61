#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "rmt/spectral.hpp"
#include "rmt/stats.hpp"

namespace rmt::comparison {

// --- Swap schedule ---------------------------------------------------------

// Bijective ordering of the upper-triangular index set {(i,j): i <= j},
// 1-based on both sides, row-major. gamma_max = N(N+1)/2.
struct SwapSchedule {
  int N = 0;
  int gamma_max = 0;
  int forward(int i, int j) const;                 // (i,j), i <= j -> gamma
  std::pair<int, int> inverse(int gamma) const;    // gamma -> (i,j), i <= j
};
SwapSchedule ordering_map(int N);

// --- Hybrid matrices and the telescope -------------------------------------

// Interpolating matrix H_gamma: slot g of the standardized entry array is
// taken from w_entries when Phi <= gamma and from v_entries otherwise, so
// H_0 is the pure-v matrix and H_{gamma_max} the pure-w matrix, bit-exactly.
Eigen::MatrixXcd hybrid_matrix(const EnsembleSpec& spec,
                               const std::vector<std::complex<double>>& v_entries,
                               const std::vector<std::complex<double>>& w_entries,
                               int gamma);

// d_gamma = F(H_{gamma-1}) - F(H_gamma) for gamma = 1..gamma_max; the sum
// telescopes to F(H^v) - F(H^w) exactly, pathwise.
std::vector<double> telescope_decompose(
    const EnsembleSpec& spec, const std::vector<std::complex<double>>& v_entries,
    const std::vector<std::complex<double>>& w_entries,
    const std::function<double(const Eigen::MatrixXcd&)>& F);

// --- Resolvent expansion ---------------------------------------------------

// Audit of S = sum_{m} (-N^{-1/2})^m (RV)^m R + remainder where
// H_{gamma-1} = Q + N^{-1/2} V, R = (Q - z)^{-1}, S = (H_{gamma-1} - z)^{-1},
// and V carries the swapped pair (a,b)/(b,a).
struct ExpansionRemainder {
  std::vector<double> remainder;  // max-entry norm of the order-m remainder, m=1..order
  std::vector<double> bound;      // N^{-(m+1)/2} ||R||^{m+1} ||V||^{m+1} ||S|| (Frobenius)
  int a = 0, b = 0;               // 1-based swapped pair
};
ExpansionRemainder resolvent_expansion_remainder(
    const EnsembleSpec& spec, const std::vector<std::complex<double>>& v_entries,
    const std::vector<std::complex<double>>& w_entries, int gamma,
    std::complex<double> z, int order);

// --- Green-function comparison statistic -----------------------------------

// Monte Carlo estimate of [E^v - E^w] F(N int_{E1}^{E2} Im m(y + i eta) dy)
// at eta = N^{-2/3-eps}, with a paired bootstrap CI on the difference and
// the N^{-1/6} reference scale. Trials are coupled through shared per-slot
// RNG streams, so identical ensembles give a difference of exactly 0.
struct GfctResult {
  double mean_v = 0.0, mean_w = 0.0;
  double difference = 0.0;
  stats::Interval difference_ci;
  double reference_scale = 0.0;  // N^{-1/6}
  int trials = 0;
  std::vector<double> samples_v, samples_w;
};
GfctResult gfct_statistic(const EnsembleSpec& ensemble_v, const EnsembleSpec& ensemble_w,
                          const std::function<double(double)>& F, double E1, double E2,
                          double eps, int trials, std::uint64_t root_seed);

// --- Universality experiments ----------------------------------------------

struct EigenvalueTerm {
  int beta = 1;  // 1-based
  SpectralRegion region = SpectralRegion::edge;
};
struct EigenvectorTerm {
  int alpha = 1, i = 1, j = 1;  // 1-based; contributes Re (and Im when i != j)
};
// theta receives the scaled eigenvalue terms followed by the overlap terms,
// in declaration order.
struct ObservableSpec {
  std::vector<EigenvalueTerm> eigenvalue_terms;
  std::vector<EigenvectorTerm> eigenvector_terms;
  std::function<double(const std::vector<double>&)> theta;
};

struct UniversalityPerN {
  int N = 0;
  double ks = 0.0;
  double mean_difference = 0.0;
  stats::Interval difference_ci;
  int trials = 0;
  int skipped_v = 0, skipped_w = 0;
  std::vector<double> samples_v, samples_w;
};
struct ComparisonReport {
  std::vector<UniversalityPerN> per_n;
  std::uint64_t root_seed = 0;
  int trials = 0;
  bool skip_flagged = false;  // some N skipped >= 5% of its trials
};
using EnsembleFactory = std::function<EnsembleSpec(int)>;
ComparisonReport universality_experiment(const EnsembleFactory& ensemble_v,
                                         const EnsembleFactory& ensemble_w,
                                         const ObservableSpec& obs,
                                         const std::vector<int>& n_list, int trials,
                                         std::uint64_t root_seed, int parallelism = 1);

// --- Level repulsion -------------------------------------------------------

// Window half width N^{-2/3-alpha_exp} at the edge, N^{-1-alpha_exp} in the
// bulk. One flag per grid point: does [E - w, E + w] hold >= 2 eigenvalues.
std::vector<bool> repulsion_hits(const SpectralData& spec, SpectralRegion region,
                                 double alpha_exp, const std::vector<double>& e_grid);

struct RepulsionPoint {
  double E = 0.0;
  double window_half_width = 0.0;
  double probability = 0.0;
  stats::Interval ci;  // 95% binomial
};
struct RepulsionResult {
  std::vector<RepulsionPoint> points;
  double union_probability = 0.0;  // P(some grid window holds >= 2)
  stats::Interval union_ci;
  double reference = 0.0;  // N^{-alpha_exp}
  int trials = 0;
};
RepulsionResult repulsion_estimate(const EnsembleSpec& ensemble, SpectralRegion region,
                                   double alpha_exp, const std::vector<double>& e_grid,
                                   int trials, std::uint64_t root_seed,
                                   int parallelism = 1);

}  // namespace rmt::comparison
