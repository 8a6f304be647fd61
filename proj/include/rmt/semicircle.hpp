#pragma once

#include <complex>
#include <vector>

namespace rmt::semicircle {

// Semicircle density (1/2pi) sqrt((4 - E^2)_+).
double rho_sc(double E);

// Integrated semicircle distribution; closed form on [-2,2], clamped outside.
double n_sc(double E);

// Classical location gamma_alpha solving n_sc(gamma) = alpha/N,
// 1 <= alpha <= N. Bisection to machine width, then one Newton polish.
double classical_location(int alpha, int N);

std::vector<double> classical_locations(int N);

// Stieltjes transform of the semicircle law: the root of
// m + 1/(z + m) = 0 with Im m > 0 (requires Im z > 0).
std::complex<double> m_sc(std::complex<double> z);

}  // namespace rmt::semicircle
