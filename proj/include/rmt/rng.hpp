#pragma once

#include <cstdint>
#include <string_view>

namespace rmt::rng {

// 64-bit finalizer (splitmix64). Used both as a hash and as the stream
// increment mixer below.
std::uint64_t mix64(std::uint64_t x);

// Deterministic seed derivation for independent Monte Carlo streams.
// Distinct (rootSeed, trialIndex, streamTag) triples give statistically
// independent streams.
std::uint64_t derive_seed(std::uint64_t root_seed, std::uint64_t trial_index,
                          std::uint64_t stream_tag);
std::uint64_t derive_seed(std::uint64_t root_seed, std::uint64_t trial_index,
                          std::string_view stream_tag);

// Counter-based stream: the n-th output is a pure function of (key, n).
// Keying one stream per matrix entry makes the v- and w-arrays of a
// swapping experiment reproducible independently of evaluation order.
class Stream {
 public:
  explicit Stream(std::uint64_t key) : key_(key), counter_(0) {}

  std::uint64_t next_u64();

  // Uniform on (0,1), never returns 0 or 1.
  double next_uniform();

  // Standard normal via Box-Muller (consumes two uniforms per pair).
  double next_gaussian();

 private:
  std::uint64_t key_;
  std::uint64_t counter_;
  bool have_cached_ = false;
  double cached_ = 0.0;
};

}  // namespace rmt::rng
