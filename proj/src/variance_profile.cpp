#include "rmt/variance_profile.hpp"

#include <cmath>
#include <stdexcept>

namespace rmt {

VarianceProfile make_wigner_profile(int N) {
  if (N < 2) throw std::invalid_argument("make_wigner_profile: N must be >= 2");
  VarianceProfile p;
  p.N = N;
  p.kind = ProfileKind::wigner;
  p.sigma2 = Eigen::MatrixXd::Constant(N, N, 1.0 / N);
  p.C0 = 1.0;
  return p;
}

VarianceProfile make_band_profile(int N, double band_fraction) {
  if (N < 2) throw std::invalid_argument("make_band_profile: N must be >= 2");
  if (!(band_fraction > 0.0) || band_fraction > 1.0)
    throw std::invalid_argument("make_band_profile: band fraction must be in (0,1]");
  const int half_width = static_cast<int>(std::floor(band_fraction * N / 2.0));
  if (half_width < 1)
    throw std::invalid_argument("make_band_profile: band too narrow to normalize");
  // Circulant band: every row has the same number of nonzero entries, so
  // uniform weights give exact unit row sums.
  const int nnz_per_row = 2 * half_width + 1;
  VarianceProfile p;
  p.N = N;
  p.kind = ProfileKind::band;
  p.band_fraction = band_fraction;
  p.sigma2 = Eigen::MatrixXd::Zero(N, N);
  const double w = 1.0 / nnz_per_row;
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      int d = std::abs(i - j);
      d = std::min(d, N - d);  // mod-N distance
      if (d <= half_width) p.sigma2(i, j) = w;
    }
  }
  p.C0 = w * N;
  return p;
}

VarianceProfile make_custom_profile(Eigen::MatrixXd sigma2, double C0) {
  if (sigma2.rows() != sigma2.cols() || sigma2.rows() < 2)
    throw std::invalid_argument("make_custom_profile: need square matrix, N >= 2");
  VarianceProfile p;
  p.N = static_cast<int>(sigma2.rows());
  p.kind = ProfileKind::custom;
  p.sigma2 = std::move(sigma2);
  p.C0 = C0;
  return p;
}

ProfileReport validate_profile(const VarianceProfile& profile) {
  ProfileReport report;
  const int N = profile.N;
  const Eigen::MatrixXd& B = profile.sigma2;

  double max_err = 0.0;
  for (int j = 0; j < N; ++j)
    max_err = std::max(max_err, std::abs(B.col(j).sum() - 1.0));
  report.row_sum_max_err = max_err;
  report.row_sums_ok = max_err <= 1e-12;

  report.entry_bound_c0 = B.maxCoeff() * N;
  report.entry_bound_ok = report.entry_bound_c0 <= profile.C0 * (1.0 + 1e-12);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(B, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();  // ascending
  report.spectral_gap_upper = ev(0);
  report.spectral_gap_lower = N >= 2 ? ev(N - 2) : ev(0);
  report.simple_top_eigenvalue =
      report.row_sums_ok && (ev(N - 1) - report.spectral_gap_lower) > 1e-10;
  return report;
}

std::string profile_kind_name(ProfileKind kind) {
  switch (kind) {
    case ProfileKind::wigner: return "wigner";
    case ProfileKind::band: return "band";
    case ProfileKind::custom: return "custom";
  }
  return "?";
}

}  // namespace rmt
