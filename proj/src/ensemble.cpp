#include "rmt/ensemble.hpp"

#include <cmath>
#include <stdexcept>

#include "rmt/rng.hpp"

namespace rmt {

std::size_t upper_triangle_count(int N) {
  return static_cast<std::size_t>(N) * (N + 1) / 2;
}

std::size_t upper_index(int N, int i, int j) {
  // Row-major over {(i,j): i <= j}, 0-based.
  return static_cast<std::size_t>(i) * N - static_cast<std::size_t>(i) * (i - 1) / 2 -
         i + static_cast<std::size_t>(j);
}

std::pair<int, int> upper_index_inverse(int N, std::size_t g) {
  // Walk rows; row i holds N - i slots.
  int i = 0;
  std::size_t offset = 0;
  while (g >= offset + static_cast<std::size_t>(N - i)) {
    offset += N - i;
    ++i;
  }
  const int j = i + static_cast<int>(g - offset);
  return {i, j};
}

std::vector<std::complex<double>> draw_entry_array(const EnsembleSpec& spec,
                                                   std::uint64_t seed,
                                                   std::string_view stream_tag) {
  const int N = spec.N();
  const bool complex_entries = spec.symmetry == SymmetryClass::complex_hermitian;
  const std::uint64_t tag_base = rng::derive_seed(seed, 0, stream_tag);
  std::vector<std::complex<double>> entries(upper_triangle_count(N));
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < N; ++i) {
    for (int j = i; j < N; ++j) {
      const std::size_t g = upper_index(N, i, j);
      rng::Stream stream(rng::mix64(tag_base ^ rng::mix64(g)));
      if (i == j) {
        entries[g] = spec.diagonal_law.sample(stream);
      } else if (complex_entries) {
        const double x = spec.off_diagonal_law.sample(stream);
        const double y = spec.off_diagonal_law.sample(stream);
        entries[g] = std::complex<double>(x, y) * inv_sqrt2;
      } else {
        entries[g] = spec.off_diagonal_law.sample(stream);
      }
    }
  }
  return entries;
}

Eigen::MatrixXcd assemble_matrix(const EnsembleSpec& spec,
                                 const std::vector<std::complex<double>>& entries) {
  const int N = spec.N();
  if (entries.size() != upper_triangle_count(N))
    throw std::invalid_argument("assemble_matrix: entry array has wrong length");
  Eigen::MatrixXcd H(N, N);
  for (int i = 0; i < N; ++i) {
    for (int j = i; j < N; ++j) {
      const std::size_t g = upper_index(N, i, j);
      double sigma = std::sqrt(spec.profile.sigma2(i, j));
      if (i == j) sigma *= spec.diagonal_scale;
      const std::complex<double> h = sigma * entries[g];
      H(i, j) = h;
      H(j, i) = std::conj(h);
    }
  }
  return H;
}

MatrixSample sample_matrix(const EnsembleSpec& spec, std::uint64_t seed) {
  MatrixSample sample;
  sample.seed = seed;
  sample.upper_entries = draw_entry_array(spec, seed);
  sample.H = assemble_matrix(spec, sample.upper_entries);
  return sample;
}

EnsembleSpec make_gue(int N) {
  EnsembleSpec spec;
  spec.symmetry = SymmetryClass::complex_hermitian;
  spec.profile = make_wigner_profile(N);
  spec.off_diagonal_law = make_gaussian_law();
  spec.diagonal_law = make_gaussian_law();
  return spec;
}

EnsembleSpec make_goe(int N) {
  EnsembleSpec spec;
  spec.symmetry = SymmetryClass::real_symmetric;
  spec.profile = make_wigner_profile(N);
  spec.off_diagonal_law = make_gaussian_law();
  spec.diagonal_law = make_gaussian_law();
  return spec;
}

EnsembleSpec make_goe_textbook(int N) {
  EnsembleSpec spec = make_goe(N);
  spec.diagonal_scale = std::sqrt(2.0);
  return spec;
}

EnsembleSpec make_wigner_ensemble(int N, SymmetryClass symmetry, const EntryLaw& law) {
  EnsembleSpec spec;
  spec.symmetry = symmetry;
  spec.profile = make_wigner_profile(N);
  spec.off_diagonal_law = law;
  spec.diagonal_law = law;
  return spec;
}

std::string symmetry_name(SymmetryClass s) {
  return s == SymmetryClass::real_symmetric ? "real_symmetric" : "complex_hermitian";
}

}  // namespace rmt
