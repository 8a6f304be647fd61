#include "rmt/semicircle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rmt::semicircle {

namespace {
constexpr double kPi = std::numbers::pi;
}

double rho_sc(double E) {
  const double t = 4.0 - E * E;
  if (t <= 0.0) return 0.0;
  return std::sqrt(t) / (2.0 * kPi);
}

double n_sc(double E) {
  if (E <= -2.0) return 0.0;
  if (E >= 2.0) return 1.0;
  return 0.5 + E * std::sqrt(4.0 - E * E) / (4.0 * kPi) + std::asin(E / 2.0) / kPi;
}

double classical_location(int alpha, int N) {
  if (alpha < 1 || alpha > N)
    throw std::out_of_range("classical_location: alpha must be in [1, N]");
  if (alpha == N) return 2.0;
  const double target = static_cast<double>(alpha) / N;
  double lo = -2.0, hi = 2.0;
  while (hi - lo > 1e-14) {
    const double mid = 0.5 * (lo + hi);
    if (n_sc(mid) < target)
      lo = mid;
    else
      hi = mid;
  }
  double x = 0.5 * (lo + hi);
  // One Newton step; the density vanishes only at the edges, which the
  // bisection has already avoided for interior alpha.
  const double d = rho_sc(x);
  if (d > 1e-12) x -= (n_sc(x) - target) / d;
  return x;
}

std::vector<double> classical_locations(int N) {
  std::vector<double> gamma(N);
  for (int alpha = 1; alpha <= N; ++alpha)
    gamma[alpha - 1] = classical_location(alpha, N);
  return gamma;
}

std::complex<double> m_sc(std::complex<double> z) {
  if (!(z.imag() > 0.0))
    throw std::invalid_argument("m_sc: requires Im z > 0");
  // (-z + sqrt(z^2 - 4)) / 2 with the branch chosen so that Im m > 0.
  const std::complex<double> root = std::sqrt(z * z - 4.0);
  const std::complex<double> m_plus = 0.5 * (-z + root);
  const std::complex<double> m_minus = 0.5 * (-z - root);
  return m_plus.imag() > 0.0 ? m_plus : m_minus;
}

}  // namespace rmt::semicircle
