#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "rmt/spectral.hpp"

namespace rmt::resolvent {

using Complex = std::complex<double>;

// z = E + i*eta convention; eta > 0 everywhere a resolvent is evaluated.
struct SpectralParameter {
  double E = 0.0;
  double eta = 0.0;
  Complex z() const { return {E, eta}; }
};

// --- Quadrature -----------------------------------------------------------

// Adaptive Simpson with an absolute tolerance and a cap on the initial
// subdivision step (the integrands here have Lorentzian peaks of width eta;
// the cap guarantees the peaks are seen).
double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double abs_tol, double max_step);

// --- Resolvent entries ----------------------------------------------------

// G_ij(z) = sum_beta u_beta(i) conj(u_beta(j)) / (lambda_beta - z),
// the (i,j) entry of (H - z)^{-1}. 1-based i, j; Im z != 0.
Complex green_entry(const SpectralData& spec, Complex z, int i, int j);

// m(z) = (1/N) sum_alpha 1/(lambda_alpha - z).
Complex stieltjes(const SpectralData& spec, Complex z);

// (G_ij(z) - G_ij(conj z)) / (2i); equals
// sum_beta eta u_beta(i) conj(u_beta(j)) / ((E - lambda_beta)^2 + eta^2).
Complex tilde_green(const SpectralData& spec, Complex z, int i, int j);

// Full resolvent matrix via the spectral decomposition (one gemm).
Eigen::MatrixXcd green_matrix(const SpectralData& spec, Complex z);

// --- Local-law control parameters -----------------------------------------

struct ControlParams {
  double lambda_d = 0.0;  // max_i |G_ii - m_sc|
  double lambda_o = 0.0;  // max_{i != j} |G_ij|
  double lambda = 0.0;    // |m - m_sc|
  SpectralParameter at;
};
ControlParams control_params(const SpectralData& spec, Complex z);

struct LocalLawPoint {
  SpectralParameter at;
  double lambda_ratio = 0.0;  // Lambda * N * eta / (log N)^p
  double entry_ratio = 0.0;   // (Lambda_d + Lambda_o) / entrywise bound
  bool in_core_domain = false;  // eta above ~1/N (average-law domain)
  bool pass = false;
};
struct LocalLawAudit {
  std::vector<LocalLawPoint> points;
  double log_power = 2.0;
  double norm_excess = 0.0;  // max(|lambda_1|, lambda_N) - 2
  double norm_bound = 0.0;   // N^{-2/3} (log N)^p
  bool norm_ok = false;
  bool all_ok = false;
};
// Ratios of the measured control parameters against the local-law shaped
// bounds with (log N)^log_power in place of the asymptotic prefactors.
// Points with eta below (log N)^p / N are audited against the entrywise
// bound only (its small-eta extension), not the averaged one.
LocalLawAudit local_law_audit(const SpectralData& spec,
                              const std::vector<SpectralParameter>& grid,
                              double log_power = 2.0);

// --- Smoothed counting ----------------------------------------------------

// theta_eta(x) = eta / (pi (x^2 + eta^2)).
double theta_kernel(double x, double eta);

// tr (1_{[E1,E2]} * theta_eta)(H) in arctan closed form.
double smoothed_count(const SpectralData& spec, double E1, double E2, double eta);

// Same quantity via (N/pi) integral of Im m(y + i eta) dy; cross-check oracle.
double smoothed_count_quadrature(const SpectralData& spec, double E1, double E2,
                                 double eta, double abs_tol = 1e-8);

struct SharpSmoothGap {
  double sharp = 0.0;      // tr chi_E(H), chi_E = 1_{[E_L, E]}
  double smooth = 0.0;     // tr chi_E * theta_eta (H)
  double lhs = 0.0;        // |sharp - smooth|
  double rhs = 0.0;        // C (N^{-2 eps} + local count)
  int local_count = 0;     // N(E - l1, E + l1)
  double ell1 = 0.0, eta = 0.0, E_L = 0.0;
  bool holds = false;
};
// Gap between the sharp and smoothed counts at the scales
// l1 = N^{-2/3-3eps}, eta = N^{-2/3-9eps}, E_L = -2 - 2 N^{-2/3}(log N)^p.
SharpSmoothGap sharp_vs_smooth_gap(const SpectralData& spec, double E, double eps,
                                   double C = 10.0, double log_power = 2.0);

struct SandwichCheck {
  double lower = 0.0, upper = 0.0;  // smoothed counts with shifted windows
  int sharp = 0;                    // N(-infty, E)
  bool holds = false;
};
// Sandwich of the sharp count between smoothed counts with windows shifted
// by +-l = N^{-2/3-eps}/2 at scale eta = N^{-2/3-9eps}, tolerance N^{-eps}.
SandwichCheck counting_sandwich(const SpectralData& spec, double E, double eps,
                                double log_power = 2.0);

// --- Overlap reconstruction -----------------------------------------------

struct OverlapReconstruction {
  Complex value{0.0, 0.0};
  bool quality = false;    // both adjacent gaps exceed 2 phi^c1 eta
  bool in_window = false;  // lambda_alpha inside the integration window I
  double eta = 0.0;
  double shift = 0.0;      // phi^c1 eta
  double window_half_width = 0.0;  // N^{-2/3} phi^c2
};

// N u_alpha(i) conj(u_alpha(j)) recovered from the resolvent:
// (N/pi) integral over I of tilde_G_ij(E + i eta) 1{lambda_{alpha-1} <= E^- <= lambda_alpha} dE
// with eta = N^{-2/3-eps}, E^- = E - phi^c1 eta, and the stand-in
// phi^c = (log N)^c. 1-based alpha (edge index), i, j.
OverlapReconstruction reconstruct_overlap_edge(const SpectralData& spec, int alpha,
                                               int i, int j, double eps,
                                               double c1_power = 1.0,
                                               double c2_power = 2.0);

// Same integral with the sharp eigenvalue-window indicator replaced by the
// smooth cutoff q_alpha applied to the smoothed count on [E_L, E^-] at scale
// eta_tilde = N^{-2/3-6eps}.
OverlapReconstruction reconstruct_overlap_smoothed(const SpectralData& spec, int alpha,
                                                   int i, int j, double eps,
                                                   double c1_power = 1.0,
                                                   double c2_power = 2.0,
                                                   double log_power = 2.0);

// --- Smooth bump/cutoff shapes --------------------------------------------

// C^2 ramp based on the quintic smoothstep 6t^5 - 15t^4 + 10t^3.
double smoothstep_quintic(double t);
double smoothstep_quintic_d1(double t);
double smoothstep_quintic_d2(double t);

// Characteristic function of [E1, E2] smoothed on scale eta_d:
// 1 on [E1, E2], 0 outside [E1 - eta_d, E2 + eta_d], C^2 in between.
// |f'| <= 1.875/eta_d, |f''| <= 5.7735/eta_d^2.
struct SmoothedIndicator {
  double E1 = 0.0, E2 = 0.0, eta_d = 0.0;
  double operator()(double e) const;
  double d1(double e) const;
  double d2(double e) const;
  static constexpr double kD1Bound = 1.875;
  static constexpr double kD2Bound = 5.7735026919;
};

// Smooth bump equal to 1 within distance 1/3 of center and 0 beyond 2/3.
struct CutoffQ {
  double center = 0.0;  // alpha - 1
  double operator()(double x) const;
};

// --- Helffer-Sjostrand trace ----------------------------------------------

struct HsTrace {
  double value = 0.0;
  double dropped_bound = 0.0;  // bound on the omitted small-sigma strip
  double eta_d_tilde = 0.0;
  bool converged = true;
};
// tr f(H) evaluated through the almost-analytic 2D resolvent integral
// (N/2pi) iint (i sigma f'' chi + i f chi' - sigma f' chi') m(e + i sigma),
// with the strip |sigma| < eta_d_tilde = 1e-3 * eta_d dropped and bounded.
// chi is a smooth even cutoff, 1 on [-w/2, w/2], 0 outside [-w, w].
HsTrace hs_trace(const SpectralData& spec, const SmoothedIndicator& f,
                 double chi_half_width = 1.0, double quad_tol = 1e-6);

}  // namespace rmt::resolvent
