#pragma once

#include <Eigen/Dense>
#include <complex>
#include <limits>
#include <vector>

#include "rmt/ensemble.hpp"

namespace rmt {

// Ordered spectrum plus phase-fixed eigenvectors. Column alpha of U is the
// eigenvector of lambda(alpha). Phase convention: the largest-modulus
// component of each eigenvector is real and positive.
struct SpectralData {
  Eigen::VectorXd lambda;
  Eigen::MatrixXcd U;  // empty when only eigenvalues were requested
  SymmetryClass symmetry = SymmetryClass::real_symmetric;
  double residual_probe = 0.0;  // max sampled ||H u - lambda u|| / ||H||
  bool residual_ok = true;

  int N() const { return static_cast<int>(lambda.size()); }
  bool has_vectors() const { return U.size() > 0; }
};

// Dense Hermitian/symmetric eigendecomposition (LAPACK divide and conquer).
// Checks the residual on a few sampled eigenvectors; residual_ok is cleared
// if the bound 1e-8 * ||H|| is violated.
SpectralData eigendecompose(const Eigen::MatrixXcd& H, bool with_vectors = true);

// Closed-interval count #{j : E1 <= lambda_j <= E2} by binary search.
int count_eigenvalues(const SpectralData& spec, double E1, double E2);

// Deviations |lambda_alpha - gamma_alpha| against the edge/bulk normalizer
// [min(alpha, N - alpha + 1)]^{-1/3} N^{-2/3} * (log N)^log_power.
struct RigidityProfile {
  std::vector<double> deviation;   // |lambda_alpha - gamma_alpha|
  std::vector<double> normalizer;  // includes the (log N)^log_power factor
  double worst_ratio = 0.0;
  int worst_alpha = 0;  // 1-based
};
RigidityProfile rigidity_profile(const SpectralData& spec,
                                 const std::vector<double>& gamma,
                                 double log_power = 2.0);

// N * max_{alpha,i} |u_alpha(i)|^2.
double delocalization_stat(const SpectralData& spec);

// N * conj(u_alpha(i)) * u_alpha(j); invariant under a global phase of the
// stored eigenvector. 1-based alpha, i, j.
std::complex<double> eigenvector_overlap(const SpectralData& spec, int alpha,
                                         int i, int j);

enum class SpectralRegion { edge, bulk };

// N^{2/3}(lambda_beta - gamma_beta) at the edge, N(lambda_beta - gamma_beta)
// in the bulk. 1-based beta.
double scaled_eigenvalue(const SpectralData& spec, int beta, SpectralRegion region,
                         const std::vector<double>& gamma);

// Minimum nearest-neighbor spacing among eigenvalues in [E1, E2];
// +inf when fewer than two eigenvalues fall inside.
double min_gap(const SpectralData& spec, double E1, double E2);

inline constexpr double kInfiniteGap = std::numeric_limits<double>::infinity();

}  // namespace rmt
