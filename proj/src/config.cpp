#include "rmt/config.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rmt::config {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(trim(item));
  return out;
}

}  // namespace

Config Config::parse_string(const std::string& text) {
  Config cfg;
  std::stringstream ss(text);
  std::string line;
  std::string section;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw std::invalid_argument("config line " + std::to_string(lineno) +
                                    ": unterminated section header");
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line " + std::to_string(lineno) +
                                  ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty())
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": empty key");
    cfg.values_[section.empty() ? key : section + "." + key] = value;
  }
  return cfg;
}

Config Config::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_string(ss.str());
}

bool Config::has(const std::string& key) const { return values_.count(key) > 0; }

std::string Config::get(const std::string& key, const std::string& fallback) const {
  const auto it = values_.find(key);
  return it == values_.end() ? fallback : it->second;
}

double Config::get_double(const std::string& key, double fallback) const {
  const auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  try {
    std::size_t pos = 0;
    const double v = std::stod(it->second, &pos);
    if (pos != it->second.size()) throw std::invalid_argument("trailing junk");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("config: key " + key + " is not a number: " + it->second);
  }
}

int Config::get_int(const std::string& key, int fallback) const {
  const auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  try {
    std::size_t pos = 0;
    const int v = std::stoi(it->second, &pos);
    if (pos != it->second.size()) throw std::invalid_argument("trailing junk");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("config: key " + key + " is not an integer: " + it->second);
  }
}

std::uint64_t Config::get_u64(const std::string& key, std::uint64_t fallback) const {
  const auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  try {
    std::size_t pos = 0;
    const std::uint64_t v = std::stoull(it->second, &pos);
    if (pos != it->second.size()) throw std::invalid_argument("trailing junk");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("config: key " + key + " is not a 64-bit unsigned: " + it->second);
  }
}

std::vector<int> Config::get_int_list(const std::string& key,
                                      const std::vector<int>& fallback) const {
  const auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  std::vector<int> out;
  for (const std::string& piece : split(it->second, ',')) {
    if (piece.empty()) continue;
    try {
      out.push_back(std::stoi(piece));
    } catch (const std::exception&) {
      throw std::invalid_argument("config: key " + key + " has a bad list item: " + piece);
    }
  }
  if (out.empty())
    throw std::invalid_argument("config: key " + key + " is an empty list");
  return out;
}

void Config::set(const std::string& key, const std::string& value) {
  values_[key] = value;
}

void ExperimentConfig::validate() const {
  static const std::set<std::string> kinds = {
      "sample", "locallaw", "rigidity",    "deloc", "repulsion",
      "reconstruct", "compare",  "gfct", "hs-check", "selftest"};
  if (!kinds.count(kind))
    throw std::invalid_argument("config: unknown experiment kind: " + kind);
  if (n_list.empty()) throw std::invalid_argument("config: empty N list");
  for (int n : n_list)
    if (n < 2 || n > 100000)
      throw std::invalid_argument("config: N outside [2, 100000]");
  if (trials < 1) throw std::invalid_argument("config: trials >= 1 required");
  if (parallelism < 1 || parallelism > 1024)
    throw std::invalid_argument("config: parallelism outside [1, 1024]");
  // The counting lemmas use scales down to N^{-2/3-9 eps}; experiments that
  // only shrink the resolvent scale tolerate a larger eps.
  const double eps_cap = (kind == "reconstruct" || kind == "compare") ? 2.0 : 1.0 / 9.0;
  if (!(eps > 0.0 && eps < eps_cap))
    throw std::invalid_argument("config: eps out of range for this experiment");
  if (log_power < 0.0 || log_power > 10.0)
    throw std::invalid_argument("config: log_power outside [0, 10]");
  if (c1_power < 0.0 || c1_power > 10.0 || c2_power < 0.0 || c2_power > 10.0)
    throw std::invalid_argument("config: c1_power/c2_power outside [0, 10]");
  if (alpha < 1) throw std::invalid_argument("config: alpha >= 1 required");
  if (!(alpha_exp > 0.0 && alpha_exp <= 2.0))
    throw std::invalid_argument("config: alpha_exp outside (0, 2]");
  if (region != "edge" && region != "bulk")
    throw std::invalid_argument("config: region must be edge or bulk");
}

ExperimentConfig experiment_from_config(const Config& cfg) {
  ExperimentConfig ec;
  ec.kind = cfg.get("experiment.kind", "");
  ec.n_list = cfg.get_int_list("experiment.N", ec.n_list);
  ec.trials = cfg.get_int("experiment.trials", ec.trials);
  ec.root_seed = cfg.get_u64("experiment.seed", ec.root_seed);
  ec.parallelism = cfg.get_int("experiment.parallelism", ec.parallelism);
  ec.eps = cfg.get_double("knobs.eps", ec.eps);
  ec.log_power = cfg.get_double("knobs.log_power", ec.log_power);
  ec.c1_power = cfg.get_double("knobs.c1_power", ec.c1_power);
  ec.c2_power = cfg.get_double("knobs.c2_power", ec.c2_power);
  ec.alpha = cfg.get_int("knobs.alpha", ec.alpha);
  ec.alpha_exp = cfg.get_double("knobs.alpha_exp", ec.alpha_exp);
  ec.region = cfg.get("knobs.region", ec.region);
  ec.ensemble_v = cfg.get("ensemble.v", ec.ensemble_v);
  ec.ensemble_w = cfg.get("ensemble.w", ec.ensemble_w);
  ec.out_path = cfg.get("output.json", ec.out_path);
  ec.csv_path = cfg.get("output.csv", ec.csv_path);
  ec.validate();
  return ec;
}

EnsembleSpec ensemble_from_name(const std::string& name, int N) {
  const std::vector<std::string> parts = split(name, ':');
  if (parts.empty()) throw std::invalid_argument("ensemble: empty name");
  const std::string& head = parts[0];
  auto want_params = [&](std::size_t n) {
    if (parts.size() != n + 1)
      throw std::invalid_argument("ensemble " + head + ": expected " + std::to_string(n) +
                                  " parameters");
  };
  auto param = [&](std::size_t k) {
    try {
      return std::stod(parts[k]);
    } catch (const std::exception&) {
      throw std::invalid_argument("ensemble " + head + ": bad parameter " + parts[k]);
    }
  };

  if (head == "gue") {
    want_params(0);
    return make_gue(N);
  }
  if (head == "goe") {
    want_params(0);
    return make_goe(N);
  }
  if (head == "goe_textbook") {
    want_params(0);
    return make_goe_textbook(N);
  }
  if (head == "rademacher_real") {
    want_params(0);
    return make_wigner_ensemble(N, SymmetryClass::real_symmetric, make_rademacher_law());
  }
  if (head == "rademacher_hermitian") {
    want_params(0);
    return make_wigner_ensemble(N, SymmetryClass::complex_hermitian, make_rademacher_law());
  }
  if (head == "three_point_real" || head == "three_point_hermitian") {
    want_params(2);
    const auto sym = head == "three_point_real" ? SymmetryClass::real_symmetric
                                                : SymmetryClass::complex_hermitian;
    return make_wigner_ensemble(N, sym, make_three_point_law(param(1), param(2)));
  }
  if (head == "matched_real" || head == "matched_hermitian") {
    want_params(2);
    const auto sym = head == "matched_real" ? SymmetryClass::real_symmetric
                                            : SymmetryClass::complex_hermitian;
    return make_wigner_ensemble(N, sym, match_moments(param(1), param(2)));
  }
  if (head == "band_real") {
    want_params(1);
    EnsembleSpec spec;
    spec.symmetry = SymmetryClass::real_symmetric;
    spec.profile = make_band_profile(N, param(1));
    spec.off_diagonal_law = make_gaussian_law();
    spec.diagonal_law = make_gaussian_law();
    return spec;
  }
  throw std::invalid_argument("ensemble: unknown name " + head);
}

}  // namespace rmt::config
