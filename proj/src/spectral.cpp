#include "rmt/spectral.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rmt/semicircle.hpp"

namespace rmt {
namespace {

bool is_real(const Eigen::MatrixXcd& H) {
  return H.imag().cwiseAbs().maxCoeff() == 0.0;
}

void fix_phases(Eigen::MatrixXcd& U) {
  const int N = static_cast<int>(U.rows());
  for (int a = 0; a < static_cast<int>(U.cols()); ++a) {
    int imax = 0;
    double best = -1.0;
    for (int i = 0; i < N; ++i) {
      const double m = std::norm(U(i, a));
      if (m > best) {
        best = m;
        imax = i;
      }
    }
    const std::complex<double> pivot = U(imax, a);
    const double mod = std::abs(pivot);
    if (mod > 0.0) U.col(a) *= std::conj(pivot) / mod;
  }
}

}  // namespace

SpectralData eigendecompose(const Eigen::MatrixXcd& H, bool with_vectors) {
  if (H.rows() != H.cols()) throw std::invalid_argument("eigendecompose: H must be square");
  const int N = static_cast<int>(H.rows());
  SpectralData out;
  out.lambda.resize(N);
  const char jobz = with_vectors ? 'V' : 'N';

  int info = 0;
  if (is_real(H)) {
    out.symmetry = SymmetryClass::real_symmetric;
    Eigen::MatrixXd A = H.real();
    info = LAPACKE_dsyevd(LAPACK_COL_MAJOR, jobz, 'L', N, A.data(), N, out.lambda.data());
    if (with_vectors) out.U = A.cast<std::complex<double>>();
  } else {
    out.symmetry = SymmetryClass::complex_hermitian;
    Eigen::MatrixXcd A = H;
    info = LAPACKE_zheevd(LAPACK_COL_MAJOR, jobz, 'L', N,
                          reinterpret_cast<lapack_complex_double*>(A.data()), N,
                          out.lambda.data());
    if (with_vectors) out.U = std::move(A);
  }
  if (info != 0) throw std::runtime_error("eigendecompose: LAPACK failed, info=" + std::to_string(info));

  if (with_vectors) {
    fix_phases(out.U);
    // Residual spot check on a few columns; the full (H U - U Lambda) check
    // lives in the tests.
    const double hnorm = std::max(H.cwiseAbs().maxCoeff() * N, 1e-300);
    const int probes[] = {0, N / 2, N - 1};
    double worst = 0.0;
    for (int a : probes) {
      const double r = (H * out.U.col(a) - out.lambda(a) * out.U.col(a)).norm();
      worst = std::max(worst, r);
    }
    out.residual_probe = worst / hnorm;
    out.residual_ok = out.residual_probe <= 1e-8;
  }
  return out;
}

int count_eigenvalues(const SpectralData& spec, double E1, double E2) {
  if (E1 > E2) throw std::invalid_argument("count_eigenvalues: E1 > E2");
  const double* begin = spec.lambda.data();
  const double* end = begin + spec.lambda.size();
  return static_cast<int>(std::upper_bound(begin, end, E2) -
                          std::lower_bound(begin, end, E1));
}

RigidityProfile rigidity_profile(const SpectralData& spec,
                                 const std::vector<double>& gamma,
                                 double log_power) {
  const int N = spec.N();
  if (static_cast<int>(gamma.size()) != N)
    throw std::invalid_argument("rigidity_profile: gamma size mismatch");
  RigidityProfile out;
  out.deviation.resize(N);
  out.normalizer.resize(N);
  const double logp = std::pow(std::log(std::max(N, 3)), log_power);
  const double n23 = std::pow(static_cast<double>(N), -2.0 / 3.0);
  for (int a = 1; a <= N; ++a) {
    out.deviation[a - 1] = std::abs(spec.lambda(a - 1) - gamma[a - 1]);
    const double k = static_cast<double>(std::min(a, N - a + 1));
    out.normalizer[a - 1] = logp * std::pow(k, -1.0 / 3.0) * n23;
    const double ratio = out.deviation[a - 1] / out.normalizer[a - 1];
    if (ratio > out.worst_ratio) {
      out.worst_ratio = ratio;
      out.worst_alpha = a;
    }
  }
  return out;
}

double delocalization_stat(const SpectralData& spec) {
  if (!spec.has_vectors())
    throw std::invalid_argument("delocalization_stat: eigenvectors required");
  return spec.N() * spec.U.cwiseAbs2().maxCoeff();
}

std::complex<double> eigenvector_overlap(const SpectralData& spec, int alpha,
                                         int i, int j) {
  const int N = spec.N();
  if (alpha < 1 || alpha > N || i < 1 || i > N || j < 1 || j > N)
    throw std::out_of_range("eigenvector_overlap: index out of range");
  return static_cast<double>(N) *
         std::conj(spec.U(i - 1, alpha - 1)) * spec.U(j - 1, alpha - 1);
}

double scaled_eigenvalue(const SpectralData& spec, int beta, SpectralRegion region,
                         const std::vector<double>& gamma) {
  const int N = spec.N();
  if (beta < 1 || beta > N) throw std::out_of_range("scaled_eigenvalue: beta out of range");
  const double dev = spec.lambda(beta - 1) - gamma[beta - 1];
  const double scale = region == SpectralRegion::edge
                           ? std::pow(static_cast<double>(N), 2.0 / 3.0)
                           : static_cast<double>(N);
  return scale * dev;
}

double min_gap(const SpectralData& spec, double E1, double E2) {
  if (E1 > E2) throw std::invalid_argument("min_gap: E1 > E2");
  const double* begin = spec.lambda.data();
  const double* end = begin + spec.lambda.size();
  const double* lo = std::lower_bound(begin, end, E1);
  const double* hi = std::upper_bound(begin, end, E2);
  if (hi - lo < 2) return kInfiniteGap;
  double best = kInfiniteGap;
  for (const double* p = lo + 1; p != hi; ++p) best = std::min(best, *p - *(p - 1));
  return best;
}

}  // namespace rmt
