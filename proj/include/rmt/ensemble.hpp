#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "rmt/entry_law.hpp"
#include "rmt/variance_profile.hpp"

namespace rmt {

enum class SymmetryClass { real_symmetric, complex_hermitian };

struct EnsembleSpec {
  SymmetryClass symmetry = SymmetryClass::real_symmetric;
  VarianceProfile profile;
  EntryLaw off_diagonal_law;
  EntryLaw diagonal_law;
  // Multiplies the diagonal standard deviation. 1 keeps the profile's
  // sigma^2_ii (the doubly stochastic normalization); sqrt(2) gives the
  // textbook GOE diagonal.
  double diagonal_scale = 1.0;

  int N() const { return profile.N; }
};

// Row-major ordering of the upper triangle (1-based gamma), shared by
// sampling and the entry-swapping machinery.
std::size_t upper_triangle_count(int N);
std::size_t upper_index(int N, int i, int j);                 // 0-based i <= j -> 0-based slot
std::pair<int, int> upper_index_inverse(int N, std::size_t g);

// One drawn matrix together with the standardized entry array that produced
// it. H is reconstructible bit-exactly from (entries, spec).
struct MatrixSample {
  Eigen::MatrixXcd H;
  std::vector<std::complex<double>> upper_entries;  // standardized, Phi order
  std::uint64_t seed = 0;
};

// Standardized entries in Phi order: diagonal slots are always real (drawn
// from the diagonal law); off-diagonal slots are real or (X+iY)/sqrt(2)
// depending on the symmetry class. Each slot has its own counter-based
// stream keyed by (seed, gamma, stream_tag), so two tags give independent
// but individually reproducible arrays for the same slot.
std::vector<std::complex<double>> draw_entry_array(const EnsembleSpec& spec,
                                                   std::uint64_t seed,
                                                   std::string_view stream_tag = "entries");

// Deterministic assembly of H from a standardized entry array.
Eigen::MatrixXcd assemble_matrix(const EnsembleSpec& spec,
                                 const std::vector<std::complex<double>>& entries);

MatrixSample sample_matrix(const EnsembleSpec& spec, std::uint64_t seed);

// Named reference ensembles (N x N):
//   gue:            complex Hermitian, gaussian entries, wigner profile
//                   (this is also the textbook GUE).
//   goe:            real symmetric, gaussian entries, wigner profile with
//                   sigma^2_ii = 1/N (the profile-consistent reference).
//   goe_textbook:   as goe but with diagonal variance 2/N.
EnsembleSpec make_gue(int N);
EnsembleSpec make_goe(int N);
EnsembleSpec make_goe_textbook(int N);
// Wigner profile with the given standardized law for all entries.
EnsembleSpec make_wigner_ensemble(int N, SymmetryClass symmetry, const EntryLaw& law);

std::string symmetry_name(SymmetryClass s);

}  // namespace rmt
