#include "rmt/rng.hpp"

#include <cmath>
#include <numbers>

namespace rmt::rng {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t root_seed, std::uint64_t trial_index,
                          std::uint64_t stream_tag) {
  std::uint64_t h = mix64(root_seed);
  h = mix64(h ^ mix64(trial_index ^ 0x8ad6e01996f1d4b3ULL));
  h = mix64(h ^ mix64(stream_tag ^ 0x5851f42d4c957f2dULL));
  return h;
}

std::uint64_t derive_seed(std::uint64_t root_seed, std::uint64_t trial_index,
                          std::string_view stream_tag) {
  // FNV-1a over the tag bytes, then the integer path.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : stream_tag) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return derive_seed(root_seed, trial_index, h);
}

std::uint64_t Stream::next_u64() { return mix64(key_ ^ mix64(counter_++)); }

double Stream::next_uniform() {
  // 53-bit mantissa, shifted into (0,1).
  const std::uint64_t bits = next_u64() >> 11;
  return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
}

double Stream::next_gaussian() {
  if (have_cached_) {
    have_cached_ = false;
    return cached_;
  }
  const double u1 = next_uniform();
  const double u2 = next_uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double phi = 2.0 * std::numbers::pi * u2;
  cached_ = r * std::sin(phi);
  have_cached_ = true;
  return r * std::cos(phi);
}

}  // namespace rmt::rng
