#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "rmt/ensemble.hpp"
#include "rmt/resolvent.hpp"
#include "rmt/semicircle.hpp"
#include "rmt/spectral.hpp"

using namespace rmt;
using namespace rmt::resolvent;
using Cx = std::complex<double>;

namespace {

Eigen::MatrixXcd direct_resolvent(const Eigen::MatrixXcd& H, Cx z) {
  const int N = static_cast<int>(H.rows());
  const Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(N, N);
  return (H - z * I).partialPivLu().solve(I);
}

}  // namespace

TEST_CASE("adaptive simpson on polynomials and peaks") {
  const double cubic =
      adaptive_simpson([](double x) { return x * x * x - x; }, 0.0, 2.0, 1e-13, 0.5);
  CHECK(cubic == doctest::Approx(2.0).epsilon(1e-12));
  // Lorentzian with width 1e-3, integrated across 10 units.
  const double eta = 1e-3;
  const double mass = adaptive_simpson(
      [eta](double x) { return theta_kernel(x, eta); }, -5.0, 5.0, 1e-10, eta / 4.0);
  CHECK(mass == doctest::Approx(2.0 / std::numbers::pi * std::atan(5.0 / eta)).epsilon(1e-9));
  CHECK(adaptive_simpson([](double) { return 1.0; }, 1.0, 1.0, 1e-10, 0.1) == 0.0);
}

TEST_CASE("theta kernel integrates to one") {
  for (double eta : {0.5, 0.05}) {
    const double tail = 2.0 / std::numbers::pi * std::atan(1000.0 / eta);
    const double mass = adaptive_simpson(
        [eta](double x) { return theta_kernel(x, eta); }, -1000.0, 1000.0, 1e-12, eta / 2.0);
    CHECK(mass == doctest::Approx(tail).epsilon(1e-10));
  }
}

TEST_CASE("green entries match a direct inverse") {
  const auto sample = sample_matrix(make_gue(50), 101);
  const auto sd = eigendecompose(sample.H, true);
  const Cx z{0.3, 0.05};
  const Eigen::MatrixXcd G = direct_resolvent(sample.H, z);
  double worst = 0.0;
  for (int i = 1; i <= 50; i += 7)
    for (int j = 1; j <= 50; j += 5)
      worst = std::max(worst, std::abs(green_entry(sd, z, i, j) - G(i - 1, j - 1)));
  CHECK(worst < 1e-10);
  CHECK(std::abs(stieltjes(sd, z) - G.trace() / 50.0) < 1e-11);
  const Eigen::MatrixXcd Gm = green_matrix(sd, z);
  CHECK((Gm - G).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("tilde green spectral identity") {
  const auto sample = sample_matrix(make_gue(40), 103);
  const auto sd = eigendecompose(sample.H, true);
  const double E = -2.01, eta = 0.01;
  const Cx z{E, eta};
  double worst_def = 0.0, worst_sum = 0.0;
  for (int i = 1; i <= 40; i += 9) {
    for (int j = 1; j <= 40; j += 11) {
      const Cx tg = tilde_green(sd, z, i, j);
      // Definition: (G(z) - G(conj z)) / 2i.
      const Cx by_def =
          (green_entry(sd, z, i, j) - green_entry(sd, std::conj(z), i, j)) / Cx{0.0, 2.0};
      worst_def = std::max(worst_def, std::abs(tg - by_def));
      // Product form: eta sum_k G_ik(z) conj(G_jk(z)).
      Cx acc{0.0, 0.0};
      for (int k = 1; k <= 40; ++k)
        acc += green_entry(sd, z, i, k) * std::conj(green_entry(sd, z, j, k));
      worst_sum = std::max(worst_sum, std::abs(tg - eta * acc));
    }
  }
  CHECK(worst_def < 1e-10);
  CHECK(worst_sum < 1e-10);
}

TEST_CASE("minor resolvent identity S_ij = S^(k)_ij + S_ik S_kj / S_kk") {
  const auto sample = sample_matrix(make_gue(50), 107);
  const Cx z{-1.2, 0.08};
  const Eigen::MatrixXcd S = direct_resolvent(sample.H, z);
  double worst = 0.0;
  for (int k : {0, 10, 49}) {
    Eigen::MatrixXcd Hk = sample.H;
    Hk.row(k).setZero();
    Hk.col(k).setZero();
    const Eigen::MatrixXcd Sk = direct_resolvent(Hk, z);
    for (int i = 0; i < 50; ++i) {
      if (i == k) continue;
      for (int j = 0; j < 50; ++j) {
        if (j == k) continue;
        const Cx rhs = Sk(i, j) + S(i, k) * S(k, j) / S(k, k);
        worst = std::max(worst, std::abs(S(i, j) - rhs));
      }
    }
  }
  CHECK(worst < 1e-9);
}

TEST_CASE("row expansion identity S_ij = -S_ii sum_k h_ik S^(i)_kj") {
  const auto sample = sample_matrix(make_gue(50), 109);
  const Cx z{0.4, 0.06};
  const Eigen::MatrixXcd S = direct_resolvent(sample.H, z);
  double worst = 0.0;
  for (int i : {0, 7, 31}) {
    Eigen::MatrixXcd Hi = sample.H;
    Hi.row(i).setZero();
    Hi.col(i).setZero();
    const Eigen::MatrixXcd Si = direct_resolvent(Hi, z);
    for (int j = 0; j < 50; ++j) {
      if (j == i) continue;
      Cx acc{0.0, 0.0};
      for (int k = 0; k < 50; ++k)
        if (k != i) acc += sample.H(i, k) * Si(k, j);
      worst = std::max(worst, std::abs(S(i, j) + S(i, i) * acc));
    }
  }
  CHECK(worst < 1e-9);
}

TEST_CASE("control params vanish as eta grows") {
  const auto sample = sample_matrix(make_gue(100), 113);
  const auto sd = eigendecompose(sample.H, true);
  const auto far = control_params(sd, {0.0, 10.0});
  CHECK(far.lambda < 0.02);
  CHECK(far.lambda_d < 0.05);
  CHECK(far.lambda_o < 0.05);
  const auto close = control_params(sd, {0.0, 0.05});
  CHECK(close.lambda_d > far.lambda_d);
}

TEST_CASE("local law audit passes on a moderate grid") {
  const auto sample = sample_matrix(make_gue(200), 127);
  const auto sd = eigendecompose(sample.H, true);
  std::vector<SpectralParameter> grid;
  for (double E : {-2.0, -1.0, 0.0, 1.0, 2.0})
    for (double eta : {1.0, 0.3, 0.15}) grid.push_back({E, eta});
  const auto audit = local_law_audit(sd, grid);
  CHECK(audit.all_ok);
  CHECK(audit.norm_ok);
  CHECK(audit.points.size() == grid.size());
  for (const auto& p : audit.points) CHECK(p.in_core_domain);
}

TEST_CASE("local law audit rejects out-of-domain grid points") {
  const auto sample = sample_matrix(make_gue(20), 131);
  const auto sd = eigendecompose(sample.H, true);
  CHECK_THROWS_AS(local_law_audit(sd, {{6.0, 0.1}}), std::invalid_argument);
  CHECK_THROWS_AS(local_law_audit(sd, {{0.0, -0.1}}), std::invalid_argument);
}

TEST_CASE("smoothed count closed form agrees with the quadrature oracle") {
  const auto sample = sample_matrix(make_gue(60), 137);
  const auto sd = eigendecompose(sample.H, false);
  const double closed = smoothed_count(sd, -2.2, -1.7, 0.01);
  const double quad = smoothed_count_quadrature(sd, -2.2, -1.7, 0.01, 1e-9);
  CHECK(closed == doctest::Approx(quad).epsilon(1e-6));
}

TEST_CASE("smoothed count approaches the sharp count for small eta") {
  const auto sample = sample_matrix(make_gue(80), 139);
  const auto sd = eigendecompose(sample.H, false);
  const double E1 = -3.0, E2 = 0.0;
  const int sharp = count_eigenvalues(sd, E1, E2);
  CHECK(smoothed_count(sd, E1, E2, 1e-7) == doctest::Approx(sharp).epsilon(1e-4));
}

TEST_CASE("counting sandwich and gap lemma on a GUE instance") {
  const auto sample = sample_matrix(make_gue(200), 149);
  const auto sd = eigendecompose(sample.H, false);
  const double E = sd.lambda(2) + 1e-4;
  const auto sandwich = counting_sandwich(sd, E, 0.05);
  CHECK(sandwich.sharp == 3);
  CHECK(sandwich.holds);
  const auto gap = sharp_vs_smooth_gap(sd, E, 0.05);
  CHECK(gap.holds);
  CHECK(gap.lhs >= 0.0);
  CHECK(gap.eta < gap.ell1);
}

TEST_CASE("quintic smoothstep shape") {
  CHECK(smoothstep_quintic(0.0) == 0.0);
  CHECK(smoothstep_quintic(1.0) == 1.0);
  CHECK(smoothstep_quintic(0.5) == doctest::Approx(0.5));
  CHECK(smoothstep_quintic_d1(0.5) == doctest::Approx(1.875));
  CHECK(smoothstep_quintic_d1(0.0) == 0.0);
  CHECK(smoothstep_quintic_d2(0.5) == doctest::Approx(0.0).epsilon(1e-14));
  // Max curvature bound.
  double worst = 0.0;
  for (int k = 0; k <= 1000; ++k)
    worst = std::max(worst, std::abs(smoothstep_quintic_d2(k / 1000.0)));
  CHECK(worst <= SmoothedIndicator::kD2Bound * 1.0001);
}

TEST_CASE("smoothed indicator values and derivative supports") {
  const SmoothedIndicator f{-1.0, 1.0, 0.1};
  CHECK(f(0.0) == 1.0);
  CHECK(f(-1.0) == 1.0);
  CHECK(f(1.0) == 1.0);
  CHECK(f(-1.2) == 0.0);
  CHECK(f(1.2) == 0.0);
  CHECK(f(-1.05) == doctest::Approx(0.5));
  CHECK(f.d1(0.0) == 0.0);
  CHECK(f.d1(-1.05) == doctest::Approx(1.875 / 0.1));
  CHECK(f.d1(1.05) == doctest::Approx(-1.875 / 0.1));
  // Finite-difference spot check of the derivatives on the ramp.
  const double e = 1.03, h = 1e-6;
  CHECK(f.d1(e) == doctest::Approx((f(e + h) - f(e - h)) / (2.0 * h)).epsilon(1e-5));
  CHECK(f.d2(e) == doctest::Approx((f.d1(e + h) - f.d1(e - h)) / (2.0 * h)).epsilon(1e-4));
}

TEST_CASE("cutoff q plateau and support") {
  const CutoffQ q{3.0};
  CHECK(q(3.0) == 1.0);
  CHECK(q(3.0 + 1.0 / 3.0) == 1.0);
  CHECK(q(3.0 - 1.0 / 3.0) == 1.0);
  CHECK(q(3.0 + 0.67) == 0.0);
  CHECK(q(4.0) == 0.0);
  CHECK(q(3.5) == doctest::Approx(0.5));
}

TEST_CASE("helffer-sjostrand trace matches the spectral sum") {
  const auto sample = sample_matrix(make_gue(40), 151);
  const auto sd = eigendecompose(sample.H, false);
  const SmoothedIndicator f{-1.0, 1.0, 1e-3};
  const auto hs = hs_trace(sd, f);
  double direct = 0.0;
  for (int b = 0; b < 40; ++b) direct += f(sd.lambda(b));
  CHECK(hs.converged);
  CHECK(hs.value == doctest::Approx(direct).epsilon(1e-3));
}

TEST_CASE("overlap reconstruction recovers the edge overlap") {
  // Scan a few seeds and require most quality-flagged trials to land close.
  int quality = 0, close = 0;
  for (std::uint64_t seed = 200; seed < 212; ++seed) {
    const auto sample = sample_matrix(make_gue(100), seed);
    const auto sd = eigendecompose(sample.H, true);
    const auto rec = reconstruct_overlap_edge(sd, 1, 1, 1, 1.2, 2.0, 1.0);
    if (!rec.quality) continue;
    ++quality;
    const double truth = eigenvector_overlap(sd, 1, 1, 1).real();
    if (std::abs(rec.value.real() - truth) <= 0.15 * std::abs(truth)) ++close;
  }
  CHECK(quality >= 6);
  CHECK(close >= quality - 1);
}

TEST_CASE("smoothed reconstruction tracks the sharp-window variant") {
  for (std::uint64_t seed = 300; seed < 306; ++seed) {
    const auto sample = sample_matrix(make_gue(100), seed);
    const auto sd = eigendecompose(sample.H, true);
    const auto sharp = reconstruct_overlap_edge(sd, 1, 1, 1, 1.2, 2.0, 1.0);
    if (!sharp.quality) continue;
    const auto smooth = reconstruct_overlap_smoothed(sd, 1, 1, 1, 1.2, 2.0, 1.0);
    CHECK(std::abs(smooth.value.real() - sharp.value.real()) <
          0.1 * std::max(1.0, std::abs(sharp.value.real())));
  }
}

TEST_CASE("resolvent argument validation") {
  const auto sample = sample_matrix(make_gue(10), 401);
  const auto sd = eigendecompose(sample.H, true);
  CHECK_THROWS_AS(green_entry(sd, {0.0, 0.0}, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(green_entry(sd, {0.0, 0.1}, 0, 1), std::out_of_range);
  CHECK_THROWS_AS(tilde_green(sd, {0.0, -0.1}, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(smoothed_count(sd, 1.0, 0.0, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(smoothed_count(sd, 0.0, 1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(theta_kernel(0.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(reconstruct_overlap_edge(sd, 0, 1, 1, 0.05), std::out_of_range);
}
