#include "rmt/resolvent.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "rmt/semicircle.hpp"

namespace rmt::resolvent {
namespace {

constexpr double kPi = std::numbers::pi;

double simpson_panel(const std::function<double(double)>& f, double a, double fa,
                     double b, double fb, double m, double fm) {
  (void)m;
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_step(const std::function<double(double)>& f, double a, double fa,
                     double b, double fb, double m, double fm, double whole,
                     double tol, int depth) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = simpson_panel(f, a, fa, m, fm, lm, flm);
  const double right = simpson_panel(f, m, fm, b, fb, rm, frm);
  if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return adaptive_step(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
         adaptive_step(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double abs_tol, double max_step) {
  if (b <= a) return 0.0;
  const int panels = std::max(1, static_cast<int>(std::ceil((b - a) / max_step)));
  const double h = (b - a) / panels;
  double total = 0.0;
  const double panel_tol = abs_tol / panels;
  for (int k = 0; k < panels; ++k) {
    const double x0 = a + k * h;
    const double x1 = x0 + h;
    const double xm = 0.5 * (x0 + x1);
    const double f0 = f(x0), f1 = f(x1), fm = f(xm);
    const double whole = simpson_panel(f, x0, f0, x1, f1, xm, fm);
    total += adaptive_step(f, x0, f0, x1, f1, xm, fm, whole, panel_tol, 30);
  }
  return total;
}

Complex green_entry(const SpectralData& spec, Complex z, int i, int j) {
  if (z.imag() == 0.0) throw std::invalid_argument("green_entry: Im z must be nonzero");
  const int N = spec.N();
  if (i < 1 || i > N || j < 1 || j > N)
    throw std::out_of_range("green_entry: index out of range");
  if (!spec.has_vectors())
    throw std::invalid_argument("green_entry: eigenvectors required");
  Complex acc{0.0, 0.0};
  for (int b = 0; b < N; ++b)
    acc += spec.U(i - 1, b) * std::conj(spec.U(j - 1, b)) / (spec.lambda(b) - z);
  return acc;
}

Complex stieltjes(const SpectralData& spec, Complex z) {
  if (z.imag() == 0.0) throw std::invalid_argument("stieltjes: Im z must be nonzero");
  Complex acc{0.0, 0.0};
  for (int b = 0; b < spec.N(); ++b) acc += 1.0 / (spec.lambda(b) - z);
  return acc / static_cast<double>(spec.N());
}

Complex tilde_green(const SpectralData& spec, Complex z, int i, int j) {
  if (!(z.imag() > 0.0)) throw std::invalid_argument("tilde_green: Im z must be positive");
  const int N = spec.N();
  if (i < 1 || i > N || j < 1 || j > N)
    throw std::out_of_range("tilde_green: index out of range");
  const double E = z.real(), eta = z.imag();
  Complex acc{0.0, 0.0};
  for (int b = 0; b < N; ++b) {
    const double d = E - spec.lambda(b);
    acc += spec.U(i - 1, b) * std::conj(spec.U(j - 1, b)) * (eta / (d * d + eta * eta));
  }
  return acc;
}

Eigen::MatrixXcd green_matrix(const SpectralData& spec, Complex z) {
  if (z.imag() == 0.0) throw std::invalid_argument("green_matrix: Im z must be nonzero");
  const int N = spec.N();
  Eigen::VectorXcd w(N);
  for (int b = 0; b < N; ++b) w(b) = 1.0 / (spec.lambda(b) - z);
  return (spec.U * w.asDiagonal()) * spec.U.adjoint();
}

ControlParams control_params(const SpectralData& spec, Complex z) {
  if (!(z.imag() > 0.0)) throw std::invalid_argument("control_params: Im z must be positive");
  const int N = spec.N();
  const Eigen::MatrixXcd G = green_matrix(spec, z);
  const Complex msc = semicircle::m_sc(z);
  ControlParams out;
  out.at = {z.real(), z.imag()};
  Complex m{0.0, 0.0};
  for (int i = 0; i < N; ++i) {
    m += G(i, i);
    out.lambda_d = std::max(out.lambda_d, std::abs(G(i, i) - msc));
    for (int j = 0; j < N; ++j)
      if (j != i) out.lambda_o = std::max(out.lambda_o, std::abs(G(i, j)));
  }
  m /= static_cast<double>(N);
  out.lambda = std::abs(m - msc);
  return out;
}

LocalLawAudit local_law_audit(const SpectralData& spec,
                              const std::vector<SpectralParameter>& grid,
                              double log_power) {
  const int N = spec.N();
  const double logp = std::pow(std::log(std::max(N, 3)), log_power);
  LocalLawAudit audit;
  audit.log_power = log_power;

  for (const auto& pt : grid) {
    if (std::abs(pt.E) > 5.0 || !(pt.eta > 0.0) || pt.eta > 10.0)
      throw std::invalid_argument("local_law_audit: grid point outside {|E|<=5, eta in (0,10]}");
    const Complex z = pt.z();
    const ControlParams cp = control_params(spec, z);
    const double n_eta = N * pt.eta;
    const double im_msc = semicircle::m_sc(z).imag();
    const double entry_bound = logp * (std::sqrt(im_msc / n_eta) + 1.0 / n_eta);
    LocalLawPoint p;
    p.at = pt;
    p.lambda_ratio = cp.lambda * n_eta / logp;
    p.entry_ratio = (cp.lambda_d + cp.lambda_o) / entry_bound;
    p.in_core_domain = pt.eta > logp / N;
    p.pass = p.entry_ratio <= 1.0 && (!p.in_core_domain || p.lambda_ratio <= 1.0);
    audit.points.push_back(p);
  }

  audit.norm_bound = std::pow(static_cast<double>(N), -2.0 / 3.0) * logp;
  const double norm = std::max(std::abs(spec.lambda(0)), std::abs(spec.lambda(N - 1)));
  audit.norm_excess = norm - 2.0;
  audit.norm_ok = audit.norm_excess <= audit.norm_bound;
  audit.all_ok = audit.norm_ok &&
                 std::all_of(audit.points.begin(), audit.points.end(),
                             [](const LocalLawPoint& p) { return p.pass; });
  return audit;
}

double theta_kernel(double x, double eta) {
  if (!(eta > 0.0)) throw std::invalid_argument("theta_kernel: eta must be positive");
  return eta / (kPi * (x * x + eta * eta));
}

double smoothed_count(const SpectralData& spec, double E1, double E2, double eta) {
  if (E1 > E2) throw std::invalid_argument("smoothed_count: E1 > E2");
  if (!(eta > 0.0)) throw std::invalid_argument("smoothed_count: eta must be positive");
  double acc = 0.0;
  for (int b = 0; b < spec.N(); ++b)
    acc += std::atan((E2 - spec.lambda(b)) / eta) - std::atan((E1 - spec.lambda(b)) / eta);
  return acc / kPi;
}

double smoothed_count_quadrature(const SpectralData& spec, double E1, double E2,
                                 double eta, double abs_tol) {
  auto integrand = [&](double y) {
    return stieltjes(spec, Complex(y, eta)).imag();
  };
  const double integral =
      adaptive_simpson(integrand, E1, E2, abs_tol * kPi / spec.N(), eta / 2.0);
  return spec.N() / kPi * integral;
}

SharpSmoothGap sharp_vs_smooth_gap(const SpectralData& spec, double E, double eps,
                                   double C, double log_power) {
  const int N = spec.N();
  const double n23 = std::pow(static_cast<double>(N), -2.0 / 3.0);
  SharpSmoothGap out;
  out.ell1 = std::pow(static_cast<double>(N), -2.0 / 3.0 - 3.0 * eps);
  out.eta = std::pow(static_cast<double>(N), -2.0 / 3.0 - 9.0 * eps);
  out.E_L = -2.0 - 2.0 * n23 * std::pow(std::log(std::max(N, 3)), log_power);
  out.sharp = count_eigenvalues(spec, out.E_L, E);
  out.smooth = smoothed_count(spec, out.E_L, E, out.eta);
  out.lhs = std::abs(out.sharp - out.smooth);
  out.local_count = count_eigenvalues(spec, E - out.ell1, E + out.ell1);
  out.rhs = C * (std::pow(static_cast<double>(N), -2.0 * eps) + out.local_count);
  out.holds = out.lhs <= out.rhs;
  return out;
}

SandwichCheck counting_sandwich(const SpectralData& spec, double E, double eps,
                                double log_power) {
  const int N = spec.N();
  const double n23 = std::pow(static_cast<double>(N), -2.0 / 3.0);
  const double eta = std::pow(static_cast<double>(N), -2.0 / 3.0 - 9.0 * eps);
  const double ell = 0.5 * std::pow(static_cast<double>(N), -2.0 / 3.0 - eps);
  const double E_L = -2.0 - 2.0 * n23 * std::pow(std::log(std::max(N, 3)), log_power);
  const double slack = std::pow(static_cast<double>(N), -eps);
  SandwichCheck out;
  out.lower = smoothed_count(spec, E_L, E - ell, eta) - slack;
  out.upper = smoothed_count(spec, E_L, E + ell, eta) + slack;
  out.sharp = count_eigenvalues(spec, -1e300, E);
  out.holds = out.lower <= out.sharp && out.sharp <= out.upper;
  return out;
}

namespace {

struct EdgeWindow {
  double eta, shift, half_width, lo, hi;  // window I = [-2 - hw, -2 + hw]
};

EdgeWindow edge_window(int N, double eps, double c1_power, double c2_power) {
  EdgeWindow w;
  const double logn = std::log(std::max(N, 3));
  w.eta = std::pow(static_cast<double>(N), -2.0 / 3.0 - eps);
  w.shift = std::pow(logn, c1_power) * w.eta;
  w.half_width = std::pow(static_cast<double>(N), -2.0 / 3.0) * std::pow(logn, c2_power);
  w.lo = -2.0 - w.half_width;
  w.hi = -2.0 + w.half_width;
  return w;
}

Complex integrate_complex(const std::function<Complex(double)>& f, double a,
                          double b, double abs_tol, double max_step) {
  const double re = adaptive_simpson([&](double x) { return f(x).real(); }, a, b,
                                     abs_tol, max_step);
  const double im = adaptive_simpson([&](double x) { return f(x).imag(); }, a, b,
                                     abs_tol, max_step);
  return {re, im};
}

void check_overlap_args(const SpectralData& spec, int alpha, int i, int j) {
  const int N = spec.N();
  if (alpha < 1 || alpha > N || i < 1 || i > N || j < 1 || j > N)
    throw std::out_of_range("reconstruct_overlap: index out of range");
}

}  // namespace

OverlapReconstruction reconstruct_overlap_edge(const SpectralData& spec, int alpha,
                                               int i, int j, double eps,
                                               double c1_power, double c2_power) {
  check_overlap_args(spec, alpha, i, j);
  const int N = spec.N();
  const EdgeWindow w = edge_window(N, eps, c1_power, c2_power);

  OverlapReconstruction out;
  out.eta = w.eta;
  out.shift = w.shift;
  out.window_half_width = w.half_width;
  const double lam = spec.lambda(alpha - 1);
  out.in_window = lam >= w.lo && lam <= w.hi;

  const double gap_below =
      alpha >= 2 ? lam - spec.lambda(alpha - 2) : kInfiniteGap;
  const double gap_above =
      alpha < N ? spec.lambda(alpha) - lam : kInfiniteGap;
  out.quality = out.in_window && gap_below > 2.0 * w.shift && gap_above > 2.0 * w.shift;

  // Indicator {lambda_{alpha-1} <= E - shift <= lambda_alpha}, lambda_0 = -inf.
  const double lo = std::max(w.lo, alpha >= 2 ? spec.lambda(alpha - 2) + w.shift : w.lo);
  const double hi = std::min(w.hi, lam + w.shift);
  if (hi <= lo) return out;

  auto f = [&](double E) { return tilde_green(spec, Complex(E, w.eta), i, j); };
  out.value = static_cast<double>(N) / kPi *
              integrate_complex(f, lo, hi, 1e-8 * N, w.eta / 10.0);
  return out;
}

OverlapReconstruction reconstruct_overlap_smoothed(const SpectralData& spec, int alpha,
                                                   int i, int j, double eps,
                                                   double c1_power, double c2_power,
                                                   double log_power) {
  check_overlap_args(spec, alpha, i, j);
  const int N = spec.N();
  const EdgeWindow w = edge_window(N, eps, c1_power, c2_power);
  const double eta_tilde = std::pow(static_cast<double>(N), -2.0 / 3.0 - 6.0 * eps);
  const double E_L = -2.0 - 2.0 * std::pow(static_cast<double>(N), -2.0 / 3.0) *
                                std::pow(std::log(std::max(N, 3)), log_power);
  const CutoffQ q{static_cast<double>(alpha - 1)};

  OverlapReconstruction out;
  out.eta = w.eta;
  out.shift = w.shift;
  out.window_half_width = w.half_width;
  const double lam = spec.lambda(alpha - 1);
  out.in_window = lam >= w.lo && lam <= w.hi;
  const double gap_below =
      alpha >= 2 ? lam - spec.lambda(alpha - 2) : kInfiniteGap;
  const double gap_above =
      alpha < N ? spec.lambda(alpha) - lam : kInfiniteGap;
  out.quality = out.in_window && gap_below > 2.0 * w.shift && gap_above > 2.0 * w.shift;

  auto f = [&](double E) -> Complex {
    const double weight = q(smoothed_count(spec, E_L, E - w.shift, eta_tilde));
    if (weight == 0.0) return {0.0, 0.0};
    return weight * tilde_green(spec, Complex(E, w.eta), i, j);
  };
  out.value = static_cast<double>(N) / kPi *
              integrate_complex(f, w.lo, w.hi, 1e-8 * N, w.eta / 10.0);
  return out;
}

double smoothstep_quintic(double t) {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  return t * t * t * (10.0 + t * (-15.0 + 6.0 * t));
}

double smoothstep_quintic_d1(double t) {
  if (t <= 0.0 || t >= 1.0) return 0.0;
  return 30.0 * t * t * (1.0 - t) * (1.0 - t);
}

double smoothstep_quintic_d2(double t) {
  if (t <= 0.0 || t >= 1.0) return 0.0;
  return 60.0 * t * (1.0 - t) * (1.0 - 2.0 * t);
}

double SmoothedIndicator::operator()(double e) const {
  if (e >= E1 && e <= E2) return 1.0;
  if (e <= E1 - eta_d || e >= E2 + eta_d) return 0.0;
  if (e < E1) return smoothstep_quintic((e - (E1 - eta_d)) / eta_d);
  return smoothstep_quintic(((E2 + eta_d) - e) / eta_d);
}

double SmoothedIndicator::d1(double e) const {
  if (e > E1 - eta_d && e < E1)
    return smoothstep_quintic_d1((e - (E1 - eta_d)) / eta_d) / eta_d;
  if (e > E2 && e < E2 + eta_d)
    return -smoothstep_quintic_d1(((E2 + eta_d) - e) / eta_d) / eta_d;
  return 0.0;
}

double SmoothedIndicator::d2(double e) const {
  if (e > E1 - eta_d && e < E1)
    return smoothstep_quintic_d2((e - (E1 - eta_d)) / eta_d) / (eta_d * eta_d);
  if (e > E2 && e < E2 + eta_d)
    return smoothstep_quintic_d2(((E2 + eta_d) - e) / eta_d) / (eta_d * eta_d);
  return 0.0;
}

double CutoffQ::operator()(double x) const {
  const double d = std::abs(x - center);
  if (d <= 1.0 / 3.0) return 1.0;
  if (d >= 2.0 / 3.0) return 0.0;
  return smoothstep_quintic((2.0 / 3.0 - d) * 3.0);
}

HsTrace hs_trace(const SpectralData& spec, const SmoothedIndicator& f,
                 double chi_half_width, double quad_tol) {
  const int N = spec.N();
  const double w = chi_half_width;
  const double eta_d = f.eta_d;
  HsTrace out;
  out.eta_d_tilde = 1e-3 * eta_d;

  auto chi = [w](double s) {
    const double d = std::abs(s);
    if (d <= 0.5 * w) return 1.0;
    if (d >= w) return 0.0;
    return smoothstep_quintic((w - d) / (0.5 * w));
  };
  auto chi_d1 = [w](double s) {
    const double d = std::abs(s);
    if (d <= 0.5 * w || d >= w) return 0.0;
    const double g = smoothstep_quintic_d1((w - d) / (0.5 * w)) / (0.5 * w);
    return s > 0.0 ? -g : g;
  };

  // Ramp supports of f' and f''.
  const double rl0 = f.E1 - eta_d, rl1 = f.E1;
  const double rr0 = f.E2, rr1 = f.E2 + eta_d;

  // sigma-integrand of the f'' term: -sigma chi(sigma) Im int f'' m de.
  auto a_term = [&](double sigma) {
    // Im m has Lorentzian spikes of width sigma; cap the step accordingly.
    const double step = std::min(eta_d / 8.0, sigma);
    auto ramp = [&](double a, double b) {
      auto g = [&](double e) {
        return f.d2(e) * stieltjes(spec, Complex(e, sigma)).imag();
      };
      return adaptive_simpson(g, a, b, quad_tol / eta_d, step);
    };
    return -sigma * chi(sigma) * (ramp(rl0, rl1) + ramp(rr0, rr1));
  };

  // Integrate the f'' term over log sigma to resolve the small-sigma range.
  auto a_log = [&](double u) {
    const double sigma = std::exp(u);
    return a_term(sigma) * sigma;
  };
  const double term_a =
      adaptive_simpson(a_log, std::log(out.eta_d_tilde), std::log(w), quad_tol, 0.25);

  // chi' terms live on sigma in [w/2, w].
  auto b_term = [&](double sigma) {
    auto m_at = [&](double e) { return stieltjes(spec, Complex(e, sigma)); };
    auto f_im = [&](double e) { return f(e) * m_at(e).imag(); };
    auto fp_re = [&](double e) { return f.d1(e) * m_at(e).real(); };
    const double i0 = adaptive_simpson(f_im, rl0, rr1, quad_tol, 0.05);
    const double i1 =
        adaptive_simpson(fp_re, rl0, rl1, quad_tol / eta_d, eta_d / 8.0) +
        adaptive_simpson(fp_re, rr0, rr1, quad_tol / eta_d, eta_d / 8.0);
    return chi_d1(sigma) * (-i0 - sigma * i1);
  };
  const double term_b = adaptive_simpson(b_term, 0.5 * w, w, quad_tol, 0.05 * w);

  out.value = static_cast<double>(N) / kPi * (term_a + term_b);

  // Bound on the dropped strip |sigma| < eta_d_tilde: integral of
  // |f''| (<= 7.5/eta_d total mass) times max |sigma m|.
  double max_sm = 0.0;
  for (double e : {rl0, 0.5 * (rl0 + rl1), rl1, rr0, 0.5 * (rr0 + rr1), rr1})
    max_sm = std::max(max_sm, std::abs(out.eta_d_tilde *
                                       stieltjes(spec, Complex(e, out.eta_d_tilde))));
  out.dropped_bound = static_cast<double>(N) / (2.0 * kPi) * (7.5 / eta_d) *
                      out.eta_d_tilde * max_sm;
  out.converged = std::isfinite(out.value);
  return out;
}

}  // namespace rmt::resolvent
