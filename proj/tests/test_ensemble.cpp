#include <doctest.h>

#include <cmath>
#include <complex>

#include "rmt/ensemble.hpp"

using namespace rmt;

TEST_CASE("upper triangle indexing round-trips") {
  const int N = 10;
  CHECK(upper_triangle_count(N) == 55);
  std::size_t expect = 0;
  for (int i = 0; i < N; ++i) {
    for (int j = i; j < N; ++j) {
      const std::size_t g = upper_index(N, i, j);
      CHECK(g == expect);
      const auto [ii, jj] = upper_index_inverse(N, g);
      CHECK(ii == i);
      CHECK(jj == j);
      ++expect;
    }
  }
}

TEST_CASE("sampling is reproducible and tag-separated") {
  const auto spec = make_gue(30);
  const auto a = draw_entry_array(spec, 99);
  const auto b = draw_entry_array(spec, 99);
  CHECK(a == b);
  const auto c = draw_entry_array(spec, 100);
  CHECK(a != c);
  const auto d = draw_entry_array(spec, 99, "other");
  CHECK(a != d);
}

TEST_CASE("assemble_matrix matches sample_matrix bit-exactly") {
  const auto spec = make_goe(25);
  const auto sample = sample_matrix(spec, 7);
  const auto H = assemble_matrix(spec, sample.upper_entries);
  CHECK((H - sample.H).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("gue samples are exactly hermitian with real diagonal") {
  const auto spec = make_gue(40);
  const auto sample = sample_matrix(spec, 3);
  CHECK((sample.H - sample.H.adjoint()).cwiseAbs().maxCoeff() == 0.0);
  for (int i = 0; i < 40; ++i) CHECK(sample.H(i, i).imag() == 0.0);
}

TEST_CASE("goe samples are real symmetric") {
  const auto spec = make_goe(40);
  const auto sample = sample_matrix(spec, 3);
  CHECK(sample.H.imag().cwiseAbs().maxCoeff() == 0.0);
  CHECK((sample.H - sample.H.transpose()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("entry variances follow the profile") {
  const int N = 30;
  const auto spec = make_gue(N);
  double sum2 = 0.0;
  const int reps = 400;
  for (int r = 0; r < reps; ++r) {
    const auto sample = sample_matrix(spec, 1000 + r);
    for (int i = 0; i < N; ++i)
      for (int j = i + 1; j < N; ++j) sum2 += std::norm(sample.H(i, j));
  }
  const double mean_var = sum2 / (reps * N * (N - 1) / 2);
  CHECK(mean_var == doctest::Approx(1.0 / N).epsilon(0.03));
}

TEST_CASE("goe textbook diagonal variance is doubled") {
  const int N = 20;
  const auto plain = make_goe(N);
  const auto textbook = make_goe_textbook(N);
  CHECK(textbook.diagonal_scale == doctest::Approx(std::sqrt(2.0)));
  const auto entries = draw_entry_array(plain, 5);
  const auto Ha = assemble_matrix(plain, entries);
  const auto Hb = assemble_matrix(textbook, entries);
  for (int i = 0; i < N; ++i)
    CHECK(Hb(i, i).real() == doctest::Approx(std::sqrt(2.0) * Ha(i, i).real()));
  CHECK((Ha - Hb).cwiseAbs().maxCoeff() ==
        doctest::Approx((Ha.diagonal() - Hb.diagonal()).cwiseAbs().maxCoeff()));
}

TEST_CASE("wigner ensemble uses the requested law everywhere") {
  const auto spec = make_wigner_ensemble(15, SymmetryClass::real_symmetric,
                                         make_rademacher_law());
  const auto sample = sample_matrix(spec, 11);
  const double scale = 1.0 / std::sqrt(15.0);
  for (int i = 0; i < 15; ++i)
    for (int j = i; j < 15; ++j)
      CHECK(std::abs(std::abs(sample.H(i, j).real()) - scale) < 1e-15);
}

TEST_CASE("symmetry names") {
  CHECK(symmetry_name(SymmetryClass::real_symmetric) == "real_symmetric");
  CHECK(symmetry_name(SymmetryClass::complex_hermitian) == "complex_hermitian");
}
