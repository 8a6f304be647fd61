#pragma once

#include <Eigen/Dense>
#include <string>

namespace rmt {

enum class ProfileKind { wigner, band, custom };

// The N x N matrix of entry variances sigma^2_ij. Symmetric, doubly
// stochastic (unit column sums), entries bounded by C0/N.
struct VarianceProfile {
  int N = 0;
  ProfileKind kind = ProfileKind::wigner;
  double band_fraction = 0.0;  // band kind only
  Eigen::MatrixXd sigma2;
  double C0 = 1.0;  // recorded entry-bound constant

  double max_entry() const { return sigma2.maxCoeff(); }
};

// Report on the doubly-stochastic structure: row-sum error, entry bound,
// and the spectral gap of the variance matrix (its spectrum should lie in
// [-1 + delta_-, 1 - delta_+] union {1} with 1 simple).
struct ProfileReport {
  double row_sum_max_err = 0.0;
  double entry_bound_c0 = 0.0;       // max entry * N
  double spectral_gap_lower = 0.0;   // second-largest eigenvalue (1 - delta_+ estimate)
  double spectral_gap_upper = 0.0;   // smallest eigenvalue (-1 + delta_- estimate)
  bool simple_top_eigenvalue = false;
  bool row_sums_ok = false;
  bool entry_bound_ok = false;
};

VarianceProfile make_wigner_profile(int N);
// Circulant band: sigma^2_ij nonzero when the mod-N distance |i-j| is at
// most floor(c*N/2), rows normalized to sum 1.
VarianceProfile make_band_profile(int N, double band_fraction);
VarianceProfile make_custom_profile(Eigen::MatrixXd sigma2, double C0);

ProfileReport validate_profile(const VarianceProfile& profile);

std::string profile_kind_name(ProfileKind kind);

}  // namespace rmt
