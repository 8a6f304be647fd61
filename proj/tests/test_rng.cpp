#include <doctest.h>

#include <bit>
#include <cmath>
#include <set>

#include "rmt/rng.hpp"

using namespace rmt::rng;

TEST_CASE("derive_seed is deterministic") {
  CHECK(derive_seed(123, 45, "v") == derive_seed(123, 45, "v"));
  CHECK(derive_seed(123, 45, std::uint64_t{7}) == derive_seed(123, 45, std::uint64_t{7}));
}

TEST_CASE("derive_seed separates stream tags") {
  Stream probe(9001);
  for (int k = 0; k < 1000000; ++k) {
    const std::uint64_t s = probe.next_u64();
    REQUIRE(derive_seed(s, 0, "v") != derive_seed(s, 0, "w"));
  }
}

TEST_CASE("derive_seed avalanche") {
  Stream probe(31337);
  double total_flips = 0.0;
  const int probes = 10000;
  for (int k = 0; k < probes; ++k) {
    const std::uint64_t root = probe.next_u64();
    const std::uint64_t trial = probe.next_u64() % 1000;
    const int bit = static_cast<int>(probe.next_u64() % 64);
    const std::uint64_t a = derive_seed(root, trial, std::uint64_t{1});
    const std::uint64_t b = derive_seed(root ^ (std::uint64_t{1} << bit), trial, std::uint64_t{1});
    total_flips += std::popcount(a ^ b);
  }
  const double mean_flips = total_flips / probes;
  CHECK(mean_flips > 24.0);
  CHECK(mean_flips < 40.0);
}

TEST_CASE("stream outputs are a pure function of (key, counter)") {
  Stream a(42), b(42);
  for (int k = 0; k < 100; ++k) CHECK(a.next_u64() == b.next_u64());
  Stream c(42), d(43);
  bool all_equal = true;
  for (int k = 0; k < 100; ++k) all_equal = all_equal && (c.next_u64() == d.next_u64());
  CHECK_FALSE(all_equal);
}

TEST_CASE("uniform stays inside the open interval") {
  Stream s(7);
  for (int k = 0; k < 100000; ++k) {
    const double u = s.next_uniform();
    REQUIRE(u > 0.0);
    REQUIRE(u < 1.0);
  }
}

TEST_CASE("gaussian moments") {
  Stream s(11);
  const int n = 200000;
  double sum = 0.0, sum2 = 0.0, sum4 = 0.0;
  for (int k = 0; k < n; ++k) {
    const double x = s.next_gaussian();
    sum += x;
    sum2 += x * x;
    sum4 += x * x * x * x;
  }
  CHECK(std::abs(sum / n) < 0.01);
  CHECK(std::abs(sum2 / n - 1.0) < 0.02);
  CHECK(std::abs(sum4 / n - 3.0) < 0.1);
}

TEST_CASE("mix64 has no trivial fixed structure") {
  std::set<std::uint64_t> seen;
  for (std::uint64_t x = 0; x < 1000; ++x) seen.insert(mix64(x));
  CHECK(seen.size() == 1000);
}
