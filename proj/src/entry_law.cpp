#include "rmt/entry_law.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace rmt {
namespace {

std::array<double, 6> moments_from_atoms(const std::vector<double>& atoms,
                                         const std::vector<double>& weights) {
  std::array<double, 6> m{};
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    double pw = weights[i];
    double x = atoms[i];
    double acc = 1.0;
    for (int k = 0; k < 6; ++k) {
      acc *= x;
      m[k] += pw * acc;
    }
  }
  return m;
}

}  // namespace

double EntryLaw::moment(int order) const {
  if (order < 1 || order > 6) throw std::out_of_range("EntryLaw::moment: order must be in 1..6");
  return moments[order - 1];
}

double EntryLaw::support_bound() const {
  switch (kind) {
    case LawKind::gaussian:
      return std::numeric_limits<double>::infinity();
    case LawKind::rademacher:
      return 1.0;
    case LawKind::three_point:
      return a;
    case LawKind::discrete: {
      double b = 0.0;
      for (double x : atoms) b = std::max(b, std::abs(x));
      return b;
    }
  }
  return std::numeric_limits<double>::infinity();
}

double EntryLaw::sample(rng::Stream& stream) const {
  switch (kind) {
    case LawKind::gaussian:
      return stream.next_gaussian();
    case LawKind::rademacher:
      return stream.next_uniform() < 0.5 ? -1.0 : 1.0;
    case LawKind::three_point: {
      const double u = stream.next_uniform();
      if (u < p) return -a;
      if (u < 2.0 * p) return a;
      return 0.0;
    }
    case LawKind::discrete: {
      const double u = stream.next_uniform();
      double cum = 0.0;
      for (std::size_t i = 0; i < atoms.size(); ++i) {
        cum += weights[i];
        if (u < cum) return atoms[i];
      }
      return atoms.back();
    }
  }
  return 0.0;
}

std::string EntryLaw::describe() const {
  switch (kind) {
    case LawKind::gaussian:
      return "gaussian";
    case LawKind::rademacher:
      return "rademacher";
    case LawKind::three_point:
      return "three_point(a=" + std::to_string(a) + ",p=" + std::to_string(p) + ")";
    case LawKind::discrete:
      return "discrete(" + std::to_string(atoms.size()) + " atoms)";
  }
  return "?";
}

EntryLaw make_gaussian_law() {
  EntryLaw law;
  law.kind = LawKind::gaussian;
  law.moments = {0.0, 1.0, 0.0, 3.0, 0.0, 15.0};
  law.tail_param = 2.0;
  return law;
}

EntryLaw make_rademacher_law() {
  EntryLaw law;
  law.kind = LawKind::rademacher;
  law.moments = {0.0, 1.0, 0.0, 1.0, 0.0, 1.0};
  return law;
}

EntryLaw make_three_point_law(double a, double p) {
  if (!(a > 0.0) || !(p > 0.0) || p > 0.5)
    throw std::invalid_argument("three_point: need a > 0 and p in (0, 1/2]");
  if (std::abs(2.0 * p * a * a - 1.0) > 1e-12)
    throw std::invalid_argument("three_point: 2*p*a^2 must equal 1 (standardized)");
  EntryLaw law;
  law.kind = LawKind::three_point;
  law.a = a;
  law.p = p;
  const double a2 = a * a;
  law.moments = {0.0, 1.0, 0.0, a2, 0.0, a2 * a2};  // m_{2k} = 2 p a^{2k} = a^{2k-2}
  return law;
}

EntryLaw make_discrete_law(std::vector<double> atoms, std::vector<double> weights) {
  if (atoms.size() != weights.size() || atoms.empty())
    throw std::invalid_argument("discrete: atoms/weights size mismatch");
  double wsum = 0.0;
  for (double w : weights) {
    if (w < 0.0 || w > 1.0) throw std::invalid_argument("discrete: weights must be in [0,1]");
    wsum += w;
  }
  if (std::abs(wsum - 1.0) > 1e-12)
    throw std::invalid_argument("discrete: weights must sum to 1");
  EntryLaw law;
  law.kind = LawKind::discrete;
  law.atoms = std::move(atoms);
  law.weights = std::move(weights);
  law.moments = moments_from_atoms(law.atoms, law.weights);
  if (std::abs(law.moments[0]) > 1e-12 || std::abs(law.moments[1] - 1.0) > 1e-12)
    throw std::invalid_argument("discrete: law must be standardized (mean 0, variance 1)");
  return law;
}

EntryLaw match_moments(double target_m3, double target_m4) {
  const double excess = target_m4 - 1.0 - target_m3 * target_m3;
  if (excess < -1e-12)
    throw std::invalid_argument(
        "match_moments: inadmissible (m3, m4): need m4 >= 1 + m3^2, got m4 = " +
        std::to_string(target_m4) + ", 1 + m3^2 = " +
        std::to_string(1.0 + target_m3 * target_m3));
  if (std::abs(target_m3) < 1e-14) {
    if (std::abs(target_m4 - 1.0) < 1e-14) return make_rademacher_law();
    // Symmetric: atoms +-sqrt(m4), each with weight 1/(2 m4).
    const double a = std::sqrt(target_m4);
    return make_three_point_law(a, 1.0 / (2.0 * target_m4));
  }
  // Asymmetric: atoms -b < 0 < c with weights p_b = t/b, p_c = t/c,
  // t = 1/(b + c). The constraints reduce to c - b = m3, b*c = m4 - m3^2.
  const double q = target_m4 - target_m3 * target_m3;  // = b*c >= 1
  const double disc = std::sqrt(target_m3 * target_m3 + 4.0 * q);
  const double c = 0.5 * (target_m3 + disc);
  const double b = 0.5 * (-target_m3 + disc);
  const double t = 1.0 / (b + c);
  const double pb = t / b;
  const double pc = t / c;
  std::vector<double> atoms{-b, 0.0, c};
  std::vector<double> weights{pb, 1.0 - pb - pc, pc};
  return make_discrete_law(std::move(atoms), std::move(weights));
}

ComplexMoment mixed_moment(const EntryLaw& law, int l, int u, bool complex_entries) {
  auto raw = [&](int k) -> double {
    if (k == 0) return 1.0;
    return law.moment(k);
  };
  if (!complex_entries) {
    return {raw(l + u), 0.0};
  }
  // h = (X + iY)/sqrt(2); expand (X - iY)^l (X + iY)^u by binomials.
  auto binom = [](int n, int k) {
    double r = 1.0;
    for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
    return r;
  };
  double re = 0.0, im = 0.0;
  for (int r = 0; r <= l; ++r) {
    for (int s = 0; s <= u; ++s) {
      const int ypow = (l - r) + (u - s);
      const double coeff = binom(l, r) * binom(u, s) * raw(r + s) * raw(ypow);
      // i-power: (-i)^(l-r) * i^(u-s) = i^((u-s)-(l-r))
      const int ip = (((u - s) - (l - r)) % 4 + 4) % 4;
      switch (ip) {
        case 0: re += coeff; break;
        case 1: im += coeff; break;
        case 2: re -= coeff; break;
        case 3: im -= coeff; break;
      }
    }
  }
  const double scale = std::pow(0.5, 0.5 * (l + u));
  return {re * scale, im * scale};
}

MomentReport moments_match(const EntryLaw& law_a, const EntryLaw& law_b,
                           int order, double tol, bool complex_entries) {
  MomentReport report;
  for (int total = 1; total <= order; ++total) {
    for (int l = 0; l <= total; ++l) {
      const int u = total - l;
      const ComplexMoment ma = mixed_moment(law_a, l, u, complex_entries);
      const ComplexMoment mb = mixed_moment(law_b, l, u, complex_entries);
      const double diff = std::hypot(ma.re - mb.re, ma.im - mb.im);
      if (diff > report.max_abs_diff) report.max_abs_diff = diff;
      if (diff > tol && report.match) {
        report.match = false;
        report.first_mismatch_l = l;
        report.first_mismatch_u = u;
      }
    }
  }
  return report;
}

TailReport tail_check(const EntryLaw& law, std::size_t n_samples, std::uint64_t seed) {
  if (n_samples < 10000)
    throw std::invalid_argument("tail_check: need at least 10^4 samples");
  TailReport report;
  report.bounded = law.bounded_support();
  for (double x = 0.5; x <= 5.0 + 1e-9; x += 0.5) report.grid.push_back(x);

  rng::Stream stream(seed);
  std::vector<std::size_t> exceed(report.grid.size(), 0);
  for (std::size_t n = 0; n < n_samples; ++n) {
    const double v = std::abs(law.sample(stream));
    for (std::size_t g = 0; g < report.grid.size(); ++g)
      if (v >= report.grid[g]) ++exceed[g];
  }
  for (std::size_t g = 0; g < report.grid.size(); ++g) {
    const double phat = static_cast<double>(exceed[g]) / n_samples;
    report.tail_prob.push_back(phat);
    report.ci_half.push_back(3.0 * std::sqrt(std::max(phat * (1.0 - phat), 1.0 / n_samples) / n_samples));
  }
  // Fit theta in log(-log(theta * P)) ~ theta * log x, crude least squares on
  // log(-log P) vs log x for interior points.
  std::vector<double> xs, ys;
  for (std::size_t g = 0; g < report.grid.size(); ++g) {
    const double pr = report.tail_prob[g];
    if (pr > 1e-6 && pr < 0.5) {
      xs.push_back(std::log(report.grid[g]));
      ys.push_back(std::log(-std::log(pr)));
    }
  }
  if (xs.size() >= 3) {
    const double n = static_cast<double>(xs.size());
    const double sx = std::accumulate(xs.begin(), xs.end(), 0.0);
    const double sy = std::accumulate(ys.begin(), ys.end(), 0.0);
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      sxx += xs[i] * xs[i];
      sxy += xs[i] * ys[i];
    }
    const double denom = n * sxx - sx * sx;
    if (std::abs(denom) > 1e-12) report.fitted_theta = (n * sxy - sx * sy) / denom;
  }
  return report;
}

}  // namespace rmt
