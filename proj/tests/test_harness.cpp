#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "rmt/config.hpp"
#include "rmt/harness.hpp"
#include "rmt/rng.hpp"

using namespace rmt::harness;
using rmt::config::Config;

TEST_CASE("run_trials is independent of the parallelism degree") {
  auto task = [](int trial, std::uint64_t seed) {
    rmt::rng::Stream s(seed);
    return std::vector<double>{static_cast<double>(trial), s.next_uniform(),
                               s.next_gaussian()};
  };
  RunOptions serial{64, 1, 99};
  RunOptions parallel{64, 8, 99};
  const auto a = run_trials(serial, task);
  const auto b = run_trials(parallel, task);
  CHECK(a.samples == b.samples);
  CHECK(a.trial_index == b.trial_index);
  CHECK(a.failures.empty());
}

TEST_CASE("constant task yields identical samples") {
  const auto out = run_trials({100, 4, 1}, [](int, std::uint64_t) {
    return std::vector<double>{42.0};
  });
  CHECK(out.samples.size() == 100);
  for (const auto& row : out.samples) CHECK(row == std::vector<double>{42.0});
  CHECK_FALSE(out.failure_threshold_exceeded);
}

TEST_CASE("failures are isolated and counted") {
  const auto out = run_trials({50, 4, 7}, [](int trial, std::uint64_t) {
    if (trial % 10 == 3) throw std::runtime_error("boom " + std::to_string(trial));
    return std::vector<double>{1.0};
  });
  CHECK(out.samples.size() == 45);
  CHECK(out.failures.size() == 5);
  CHECK(out.failure_threshold_exceeded);
  CHECK(out.failures[0].trial == 3);
  CHECK(out.failures[0].message == "boom 3");
}

TEST_CASE("run_trials input validation") {
  auto task = [](int, std::uint64_t) { return std::vector<double>{}; };
  CHECK_THROWS_AS(run_trials({0, 1, 1}, task), std::invalid_argument);
  CHECK_THROWS_AS(run_trials({1, 0, 1}, task), std::invalid_argument);
}

TEST_CASE("config parsing with sections and comments") {
  const auto cfg = Config::parse_string(
      "top = 1\n"
      "[experiment]\n"
      "kind = rigidity   # trailing comment\n"
      "N = 100, 200 ,400\n"
      "trials = 25\n"
      "seed = 12345678901234\n"
      "\n"
      "[knobs]\n"
      "eps = 0.05\n");
  CHECK(cfg.get("top", "") == "1");
  CHECK(cfg.get("experiment.kind", "") == "rigidity");
  CHECK(cfg.get_int("experiment.trials", 0) == 25);
  CHECK(cfg.get_u64("experiment.seed", 0) == 12345678901234ULL);
  CHECK(cfg.get_double("knobs.eps", 0.0) == 0.05);
  CHECK(cfg.get_int_list("experiment.N", {}) == std::vector<int>{100, 200, 400});
  CHECK(cfg.get("missing", "fallback") == "fallback");
  CHECK_FALSE(cfg.has("knobs.log_power"));
}

TEST_CASE("config parser rejects malformed input") {
  CHECK_THROWS_AS(Config::parse_string("[open\n"), std::invalid_argument);
  CHECK_THROWS_AS(Config::parse_string("no equals sign\n"), std::invalid_argument);
  CHECK_THROWS_AS(Config::parse_string("= nokey\n"), std::invalid_argument);
  const auto cfg = Config::parse_string("x = abc\n");
  CHECK_THROWS_AS(cfg.get_double("x", 0.0), std::invalid_argument);
  CHECK_THROWS_AS(cfg.get_int("x", 0), std::invalid_argument);
}

TEST_CASE("experiment config validation") {
  auto base = Config::parse_string(
      "[experiment]\nkind = locallaw\nN = 100\ntrials = 5\n");
  CHECK_NOTHROW(rmt::config::experiment_from_config(base));

  auto bad_kind = base;
  bad_kind.set("experiment.kind", "nonsense");
  CHECK_THROWS_AS(rmt::config::experiment_from_config(bad_kind), std::invalid_argument);

  auto bad_eps = base;
  bad_eps.set("knobs.eps", "0.5");
  CHECK_THROWS_AS(rmt::config::experiment_from_config(bad_eps), std::invalid_argument);

  auto bad_trials = base;
  bad_trials.set("experiment.trials", "0");
  CHECK_THROWS_AS(rmt::config::experiment_from_config(bad_trials), std::invalid_argument);
}

TEST_CASE("ensembles by name") {
  const auto gue = rmt::config::ensemble_from_name("gue", 20);
  CHECK(gue.symmetry == rmt::SymmetryClass::complex_hermitian);
  const auto goe = rmt::config::ensemble_from_name("goe", 20);
  CHECK(goe.symmetry == rmt::SymmetryClass::real_symmetric);
  const auto rad = rmt::config::ensemble_from_name("rademacher_real", 20);
  CHECK(rad.off_diagonal_law.kind == rmt::LawKind::rademacher);
  const auto tp =
      rmt::config::ensemble_from_name("three_point_hermitian:1.7320508075688772:0.16666666666666666", 20);
  CHECK(tp.off_diagonal_law.kind == rmt::LawKind::three_point);
  const auto band = rmt::config::ensemble_from_name("band_real:0.5", 20);
  CHECK(band.profile.kind == rmt::ProfileKind::band);
  CHECK_THROWS_AS(rmt::config::ensemble_from_name("mystery", 20), std::invalid_argument);
  CHECK_THROWS_AS(rmt::config::ensemble_from_name("three_point_real:2", 20),
                  std::invalid_argument);
}
