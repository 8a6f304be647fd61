#include <doctest.h>

#include <cmath>
#include <numbers>

#include "rmt/semicircle.hpp"

using namespace rmt::semicircle;

TEST_CASE("density closed form") {
  CHECK(rho_sc(0.0) == doctest::Approx(1.0 / std::numbers::pi).epsilon(1e-15));
  CHECK(rho_sc(2.0) == 0.0);
  CHECK(rho_sc(-2.0) == 0.0);
  CHECK(rho_sc(3.0) == 0.0);
  CHECK(rho_sc(1.0) == doctest::Approx(std::sqrt(3.0) / (2.0 * std::numbers::pi)));
}

TEST_CASE("distribution endpoints and symmetry") {
  CHECK(n_sc(-2.0) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(n_sc(2.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(n_sc(0.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(n_sc(-3.0) == 0.0);
  CHECK(n_sc(3.0) == 1.0);
  for (double e = -1.9; e < 2.0; e += 0.37)
    CHECK(n_sc(e) + n_sc(-e) == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("n_sc is the antiderivative of rho_sc") {
  // Trapezoid check on a fine grid.
  const double a = -1.5, b = 1.2;
  const int steps = 200000;
  double acc = 0.0;
  for (int k = 0; k < steps; ++k) {
    const double x0 = a + (b - a) * k / steps;
    const double x1 = a + (b - a) * (k + 1) / steps;
    acc += 0.5 * (rho_sc(x0) + rho_sc(x1)) * (x1 - x0);
  }
  CHECK(acc == doctest::Approx(n_sc(b) - n_sc(a)).epsilon(1e-9));
}

TEST_CASE("classical locations invert n_sc") {
  const int N = 1000;
  double worst = 0.0;
  for (int alpha = 1; alpha <= N; ++alpha) {
    const double g = classical_location(alpha, N);
    worst = std::max(worst, std::abs(n_sc(g) - static_cast<double>(alpha) / N));
  }
  CHECK(worst < 1e-12);
  CHECK(classical_location(N, N) == 2.0);
  CHECK(classical_locations(N).size() == static_cast<std::size_t>(N));
}

TEST_CASE("classical locations are increasing") {
  const auto gamma = classical_locations(200);
  for (std::size_t k = 1; k < gamma.size(); ++k) CHECK(gamma[k] > gamma[k - 1]);
}

TEST_CASE("classical_location rejects out-of-range indices") {
  CHECK_THROWS_AS(classical_location(0, 10), std::out_of_range);
  CHECK_THROWS_AS(classical_location(11, 10), std::out_of_range);
}

TEST_CASE("m_sc solves the fixed-point equation on a grid") {
  double worst = 0.0;
  for (int i = 0; i < 10; ++i) {
    for (int j = 0; j < 10; ++j) {
      const std::complex<double> z(-4.0 + 8.0 * i / 9.0, 1e-3 + 2.0 * j / 9.0);
      const auto m = m_sc(z);
      CHECK(m.imag() > 0.0);
      worst = std::max(worst, std::abs(m + 1.0 / (z + m)));
    }
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("m_sc behaves like -1/z far from the spectrum") {
  const std::complex<double> z(0.0, 100.0);
  CHECK(std::abs(m_sc(z) + 1.0 / z) < 1e-3);
}

TEST_CASE("m_sc requires the upper half plane") {
  CHECK_THROWS_AS(m_sc({0.0, -1.0}), std::invalid_argument);
  CHECK_THROWS_AS(m_sc({0.0, 0.0}), std::invalid_argument);
}
