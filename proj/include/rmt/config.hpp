#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rmt/ensemble.hpp"

namespace rmt::config {

// Flat key-value text with [section] headers; keys are stored as
// "section.key" ("" section for keys before any header). '#' starts a
// comment; whitespace around keys and values is trimmed.
class Config {
 public:
  static Config parse_string(const std::string& text);
  static Config parse_file(const std::string& path);

  bool has(const std::string& key) const;
  std::string get(const std::string& key, const std::string& fallback) const;
  double get_double(const std::string& key, double fallback) const;
  int get_int(const std::string& key, int fallback) const;
  std::uint64_t get_u64(const std::string& key, std::uint64_t fallback) const;
  std::vector<int> get_int_list(const std::string& key,
                                const std::vector<int>& fallback) const;
  void set(const std::string& key, const std::string& value);

  const std::map<std::string, std::string>& values() const { return values_; }

 private:
  std::map<std::string, std::string> values_;
};

struct ExperimentConfig {
  std::string kind;
  std::vector<int> n_list{200};
  int trials = 100;
  std::uint64_t root_seed = 1;
  int parallelism = 1;
  double eps = 0.05;
  double log_power = 2.0;
  double c1_power = 1.0;
  double c2_power = 2.0;
  int alpha = 1;  // eigenvalue/eigenvector index for index-specific runs
  double alpha_exp = 0.1;
  std::string ensemble_v = "gue";
  std::string ensemble_w;
  std::string region = "edge";
  std::string out_path;
  std::string csv_path;

  void validate() const;  // throws std::invalid_argument on bad knobs
};

ExperimentConfig experiment_from_config(const Config& cfg);

// Named ensembles for config files and the CLI:
//   gue, goe, goe_textbook,
//   rademacher_real, rademacher_hermitian,
//   three_point_real:a:p, three_point_hermitian:a:p,
//   matched_real:m3:m4, matched_hermitian:m3:m4,
//   band_real:fraction (gaussian band profile).
EnsembleSpec ensemble_from_name(const std::string& name, int N);

}  // namespace rmt::config
