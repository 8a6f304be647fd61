#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "rmt/rng.hpp"

namespace rmt {

// A standardized real entry distribution: mean 0, variance 1. Scaling by
// sigma_ij happens at sampling time, so moment matching between laws is
// exact rather than statistical.
enum class LawKind { gaussian, rademacher, three_point, discrete };

struct EntryLaw {
  LawKind kind;
  // Exact raw moments m1..m6 (m[0] = m1). Closed form for
  // gaussian/rademacher/three_point, computed from atoms for discrete.
  std::array<double, 6> moments{};
  // three_point parameters: atoms {-a, 0, +a} with weights {p, 1-2p, p}.
  double a = 0.0;
  double p = 0.0;
  // discrete parameters.
  std::vector<double> atoms;
  std::vector<double> weights;
  // Subexponential tail parameter (theta in P(|X|>=x) <= theta^-1 exp(-x^theta)),
  // when known. Bounded-support laws satisfy any theta.
  std::optional<double> tail_param;

  double moment(int order) const;  // order in 1..6
  bool bounded_support() const { return kind != LawKind::gaussian; }
  double support_bound() const;  // +inf for gaussian

  double sample(rng::Stream& stream) const;

  std::string describe() const;
};

EntryLaw make_gaussian_law();
EntryLaw make_rademacher_law();
// Requires 2*p*a^2 == 1 within 1e-12.
EntryLaw make_three_point_law(double a, double p);
// Atoms with weights summing to 1; must standardize to mean 0, variance 1.
EntryLaw make_discrete_law(std::vector<double> atoms, std::vector<double> weights);

// Construct the standardized law with prescribed third and fourth moments.
// Admissible iff m4 >= 1 + m3^2 (Cauchy-Schwarz); the solution is the
// two-atom-plus-zero law whose nonzero atoms -b < 0 < c solve
// c - b = m3, b*c = m4 - m3^2. For m3 = 0, m4 = 1 this degenerates to
// Rademacher.
EntryLaw match_moments(double target_m3, double target_m4);

// Compare all mixed moments E conj(h)^l h^u for 0 <= l+u <= order of the
// composed entry laws. For complex entries the law is (X + iY)/sqrt(2) with
// X, Y independent copies; for real entries it is X itself.
struct MomentReport {
  bool match = true;
  int first_mismatch_l = -1;
  int first_mismatch_u = -1;
  double max_abs_diff = 0.0;
};
MomentReport moments_match(const EntryLaw& law_a, const EntryLaw& law_b,
                           int order, double tol, bool complex_entries);

// Mixed moment E conj(h)^l h^u of the composed complex law (X + iY)/sqrt(2),
// or E X^(l+u) of the real law. Exposed for tests.
struct ComplexMoment {
  double re = 0.0;
  double im = 0.0;
};
ComplexMoment mixed_moment(const EntryLaw& law, int l, int u, bool complex_entries);

// Empirical tail P(|X| >= x) on a grid, with a crude subexponential fit.
struct TailReport {
  std::vector<double> grid;
  std::vector<double> tail_prob;   // empirical P(|X| >= x)
  std::vector<double> ci_half;     // binomial 3-sigma half widths
  std::optional<double> fitted_theta;
  bool bounded = false;
};
TailReport tail_check(const EntryLaw& law, std::size_t n_samples,
                      std::uint64_t seed);

}  // namespace rmt
