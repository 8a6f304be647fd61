#include "rmt/harness.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <stdexcept>

#include "rmt/rng.hpp"

namespace rmt::harness {

RunOutcome run_trials(const RunOptions& options, const TrialTask& task) {
  if (options.trials < 1) throw std::invalid_argument("run_trials: trials >= 1 required");
  if (options.parallelism < 1)
    throw std::invalid_argument("run_trials: parallelism >= 1 required");

  const int trials = options.trials;
  std::vector<std::vector<double>> rows(trials);
  std::vector<char> ok(trials, 0);
  std::vector<std::string> errors(trials);

  const auto t0 = std::chrono::steady_clock::now();
#pragma omp parallel for schedule(dynamic) num_threads(options.parallelism)
  for (int t = 0; t < trials; ++t) {
    try {
      rows[t] = task(t, rng::derive_seed(options.root_seed, t, "trial"));
      ok[t] = 1;
    } catch (const std::exception& e) {
      errors[t] = e.what();
    } catch (...) {
      errors[t] = "unknown error";
    }
  }
  const auto t1 = std::chrono::steady_clock::now();

  RunOutcome out;
  out.seconds = std::chrono::duration<double>(t1 - t0).count();
  out.seconds_per_trial = out.seconds / trials;
  for (int t = 0; t < trials; ++t) {
    if (ok[t]) {
      out.samples.push_back(std::move(rows[t]));
      out.trial_index.push_back(t);
    } else {
      out.failures.push_back({t, errors[t]});
    }
  }
  out.failure_threshold_exceeded =
      static_cast<double>(out.failures.size()) > options.failure_threshold * trials;
  return out;
}

}  // namespace rmt::harness
