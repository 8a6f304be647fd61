#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace rmt::harness {

inline constexpr const char* kSchemaVersion = "rmtlab-report-1";

struct RunOptions {
  int trials = 1;
  int parallelism = 1;
  std::uint64_t root_seed = 1;
  // A run with more than this fraction of failed trials is flagged.
  double failure_threshold = 0.01;
};

struct TrialFailure {
  int trial = 0;
  std::string message;
};

struct RunOutcome {
  // One row per successful trial, in trial order; the aggregate is a pure
  // function of (options, task), independent of the parallelism degree.
  std::vector<std::vector<double>> samples;
  std::vector<int> trial_index;  // source trial of each sample row
  std::vector<TrialFailure> failures;
  double seconds = 0.0;
  double seconds_per_trial = 0.0;
  bool failure_threshold_exceeded = false;
};

// Runs task(trial, derive_seed(root_seed, trial, "trial")) over an OpenMP
// worker pool. Exceptions are caught per trial and recorded; results are
// reduced in trial order.
using TrialTask = std::function<std::vector<double>(int trial, std::uint64_t seed)>;
RunOutcome run_trials(const RunOptions& options, const TrialTask& task);

}  // namespace rmt::harness
