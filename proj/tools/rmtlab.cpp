// rmtlab: Monte Carlo laboratory for generalized Wigner ensembles.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include "rmt/comparison.hpp"
#include "rmt/config.hpp"
#include "rmt/harness.hpp"
#include "rmt/resolvent.hpp"
#include "rmt/rng.hpp"
#include "rmt/semicircle.hpp"
#include "rmt/spectral.hpp"
#include "rmt/stats.hpp"

using json = nlohmann::ordered_json;
using rmt::config::ExperimentConfig;

namespace {

std::string iso_timestamp() {
  const std::time_t now = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  return buf;
}

json config_echo(const ExperimentConfig& ec) {
  json j;
  j["kind"] = ec.kind;
  j["N"] = ec.n_list;
  j["trials"] = ec.trials;
  j["seed"] = ec.root_seed;
  j["parallelism"] = ec.parallelism;
  j["eps"] = ec.eps;
  j["log_power"] = ec.log_power;
  j["c1_power"] = ec.c1_power;
  j["c2_power"] = ec.c2_power;
  j["alpha"] = ec.alpha;
  j["alpha_exp"] = ec.alpha_exp;
  j["region"] = ec.region;
  j["ensemble_v"] = ec.ensemble_v;
  j["ensemble_w"] = ec.ensemble_w;
  return j;
}

void emit_report(const ExperimentConfig& ec, json results, double seconds) {
  json report;
  report["schema"] = rmt::harness::kSchemaVersion;
  report["config"] = config_echo(ec);
  report["results"] = std::move(results);
  // Timestamps and timings live only here so report bodies stay comparable.
  report["metadata"] = {{"timestamp", iso_timestamp()}, {"seconds", seconds}};
  if (ec.out_path.empty()) {
    std::cout << report.dump(2) << "\n";
  } else {
    std::ofstream out(ec.out_path);
    if (!out) throw std::runtime_error("cannot open output file " + ec.out_path);
    out << report.dump(2) << "\n";
  }
}

void emit_csv(const ExperimentConfig& ec, const std::vector<std::string>& header,
              const std::vector<std::vector<double>>& rows) {
  if (ec.csv_path.empty()) return;
  std::ofstream out(ec.csv_path);
  if (!out) throw std::runtime_error("cannot open csv file " + ec.csv_path);
  for (std::size_t k = 0; k < header.size(); ++k)
    out << (k ? "," : "") << header[k];
  out << "\n";
  char buf[64];
  for (const auto& row : rows) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      std::snprintf(buf, sizeof(buf), "%.17g", row[k]);
      out << (k ? "," : "") << buf;
    }
    out << "\n";
  }
}

json interval_json(const rmt::stats::Interval& ci) {
  return json{{"lo", ci.lo}, {"hi", ci.hi}};
}

json failures_json(const rmt::harness::RunOutcome& outcome) {
  json j = json::array();
  for (const auto& f : outcome.failures)
    j.push_back({{"trial", f.trial}, {"message", f.message}});
  return j;
}

rmt::harness::RunOptions run_options(const ExperimentConfig& ec) {
  rmt::harness::RunOptions opt;
  opt.trials = ec.trials;
  opt.parallelism = ec.parallelism;
  opt.root_seed = ec.root_seed;
  return opt;
}

double median(std::vector<double> xs) {
  if (xs.empty()) return std::numeric_limits<double>::quiet_NaN();
  std::sort(xs.begin(), xs.end());
  const std::size_t n = xs.size();
  return n % 2 ? xs[n / 2] : 0.5 * (xs[n / 2 - 1] + xs[n / 2]);
}

// --- experiments ----------------------------------------------------------

int run_sample(const ExperimentConfig& ec) {
  json per_n = json::array();
  std::vector<std::vector<double>> csv_rows;
  double seconds = 0.0;
  bool failed = false;
  for (int N : ec.n_list) {
    const auto spec = rmt::config::ensemble_from_name(ec.ensemble_v, N);
    const auto outcome = rmt::harness::run_trials(run_options(ec), [&](int, std::uint64_t seed) {
      const auto sample = rmt::sample_matrix(spec, seed);
      const auto sd = rmt::eigendecompose(sample.H, false);
      return std::vector<double>{sd.lambda(0), sd.lambda(N - 1)};
    });
    seconds += outcome.seconds;
    failed = failed || outcome.failure_threshold_exceeded;
    double min_sum = 0.0, max_sum = 0.0, worst = 0.0;
    for (std::size_t k = 0; k < outcome.samples.size(); ++k) {
      const auto& row = outcome.samples[k];
      min_sum += row[0];
      max_sum += row[1];
      worst = std::max({worst, std::abs(row[0]) - 2.0, std::abs(row[1]) - 2.0});
      csv_rows.push_back({static_cast<double>(N),
                          static_cast<double>(outcome.trial_index[k]), row[0], row[1]});
    }
    const double n_ok = static_cast<double>(outcome.samples.size());
    per_n.push_back({{"N", N},
                     {"trials_ok", outcome.samples.size()},
                     {"mean_lambda_min", min_sum / n_ok},
                     {"mean_lambda_max", max_sum / n_ok},
                     {"worst_norm_excess", worst},
                     {"failures", failures_json(outcome)}});
  }
  emit_csv(ec, {"N", "trial", "lambda_min", "lambda_max"}, csv_rows);
  emit_report(ec, {{"per_n", per_n}}, seconds);
  return failed ? 1 : 0;
}

int run_locallaw(const ExperimentConfig& ec) {
  json per_n = json::array();
  double seconds = 0.0;
  bool failed = false;
  for (int N : ec.n_list) {
    const auto spec = rmt::config::ensemble_from_name(ec.ensemble_v, N);
    const double logp = std::pow(std::log(N), ec.log_power);
    std::vector<rmt::resolvent::SpectralParameter> grid;
    for (double E : {-2.0, -1.0, 0.0, 1.0, 2.0})
      for (double eta : {1.0, 0.1, 2.0 * logp / N}) grid.push_back({E, eta});

    const int points = static_cast<int>(grid.size());
    const auto outcome = rmt::harness::run_trials(run_options(ec), [&](int, std::uint64_t seed) {
      const auto sample = rmt::sample_matrix(spec, seed);
      const auto sd = rmt::eigendecompose(sample.H, true);
      const auto audit = rmt::resolvent::local_law_audit(sd, grid, ec.log_power);
      std::vector<double> row;
      for (const auto& p : audit.points) {
        row.push_back(p.lambda_ratio);
        row.push_back(p.entry_ratio);
        row.push_back(p.pass ? 1.0 : 0.0);
      }
      row.push_back(audit.norm_ok ? 1.0 : 0.0);
      row.push_back(audit.all_ok ? 1.0 : 0.0);
      return row;
    });
    seconds += outcome.seconds;
    failed = failed || outcome.failure_threshold_exceeded;

    json grid_json = json::array();
    const double n_ok = static_cast<double>(outcome.samples.size());
    for (int g = 0; g < points; ++g) {
      double worst_lambda = 0.0, worst_entry = 0.0, pass = 0.0;
      for (const auto& row : outcome.samples) {
        worst_lambda = std::max(worst_lambda, row[3 * g]);
        worst_entry = std::max(worst_entry, row[3 * g + 1]);
        pass += row[3 * g + 2];
      }
      grid_json.push_back({{"E", grid[g].E},
                           {"eta", grid[g].eta},
                           {"worst_lambda_ratio", worst_lambda},
                           {"worst_entry_ratio", worst_entry},
                           {"pass_rate", pass / n_ok}});
    }
    double norm_rate = 0.0, all_rate = 0.0;
    for (const auto& row : outcome.samples) {
      norm_rate += row[3 * points];
      all_rate += row[3 * points + 1];
    }
    per_n.push_back({{"N", N},
                     {"trials_ok", outcome.samples.size()},
                     {"grid", grid_json},
                     {"norm_pass_rate", norm_rate / n_ok},
                     {"all_pass_rate", all_rate / n_ok},
                     {"failures", failures_json(outcome)}});
  }
  emit_report(ec, {{"per_n", per_n}}, seconds);
  return failed ? 1 : 0;
}

int run_rigidity(const ExperimentConfig& ec) {
  json per_n = json::array();
  double seconds = 0.0;
  bool failed = false;
  for (int N : ec.n_list) {
    const auto spec = rmt::config::ensemble_from_name(ec.ensemble_v, N);
    const auto gamma = rmt::semicircle::classical_locations(N);
    const auto outcome = rmt::harness::run_trials(run_options(ec), [&](int, std::uint64_t seed) {
      const auto sample = rmt::sample_matrix(spec, seed);
      const auto sd = rmt::eigendecompose(sample.H, false);
      const auto prof = rmt::rigidity_profile(sd, gamma, ec.log_power);
      return std::vector<double>{prof.worst_ratio, static_cast<double>(prof.worst_alpha)};
    });
    seconds += outcome.seconds;
    failed = failed || outcome.failure_threshold_exceeded;
    std::vector<double> ratios;
    double pass = 0.0;
    for (const auto& row : outcome.samples) {
      ratios.push_back(row[0]);
      if (row[0] <= 1.0) pass += 1.0;
    }
    per_n.push_back({{"N", N},
                     {"trials_ok", outcome.samples.size()},
                     {"worst_ratio_max", *std::max_element(ratios.begin(), ratios.end())},
                     {"worst_ratio_median", median(ratios)},
                     {"pass_rate", pass / ratios.size()},
                     {"failures", failures_json(outcome)}});
  }
  emit_report(ec, {{"per_n", per_n}}, seconds);
  return failed ? 1 : 0;
}

int run_deloc(const ExperimentConfig& ec) {
  json per_n = json::array();
  double seconds = 0.0;
  bool failed = false;
  for (int N : ec.n_list) {
    const auto spec = rmt::config::ensemble_from_name(ec.ensemble_v, N);
    const double bound = std::pow(std::log(N), ec.log_power);
    const auto outcome = rmt::harness::run_trials(run_options(ec), [&](int, std::uint64_t seed) {
      const auto sample = rmt::sample_matrix(spec, seed);
      const auto sd = rmt::eigendecompose(sample.H, true);
      return std::vector<double>{rmt::delocalization_stat(sd)};
    });
    seconds += outcome.seconds;
    failed = failed || outcome.failure_threshold_exceeded;
    std::vector<double> stats;
    double pass = 0.0;
    for (const auto& row : outcome.samples) {
      stats.push_back(row[0]);
      if (row[0] <= bound) pass += 1.0;
    }
    per_n.push_back({{"N", N},
                     {"trials_ok", outcome.samples.size()},
                     {"stat_max", *std::max_element(stats.begin(), stats.end())},
                     {"stat_median", median(stats)},
                     {"bound", bound},
                     {"pass_rate", pass / stats.size()},
                     {"failures", failures_json(outcome)}});
  }
  emit_report(ec, {{"per_n", per_n}}, seconds);
  return failed ? 1 : 0;
}

int run_repulsion(const ExperimentConfig& ec) {
  json per_n = json::array();
  double seconds = 0.0;
  for (int N : ec.n_list) {
    const auto spec = rmt::config::ensemble_from_name(ec.ensemble_v, N);
    const auto region = ec.region == "edge" ? rmt::SpectralRegion::edge
                                            : rmt::SpectralRegion::bulk;
    std::vector<double> grid;
    const int base = ec.region == "edge" ? 1 : N / 2 - 2;
    for (int k = 0; k < 5; ++k)
      grid.push_back(rmt::semicircle::classical_location(
          std::clamp(base + k, 1, N), N));
    const auto t0 = std::chrono::steady_clock::now();
    const auto result = rmt::comparison::repulsion_estimate(
        spec, region, ec.alpha_exp, grid, ec.trials, ec.root_seed, ec.parallelism);
    seconds += std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    json pts = json::array();
    for (const auto& pt : result.points)
      pts.push_back({{"E", pt.E},
                     {"window_half_width", pt.window_half_width},
                     {"probability", pt.probability},
                     {"ci", interval_json(pt.ci)}});
    per_n.push_back({{"N", N},
                     {"points", pts},
                     {"union_probability", result.union_probability},
                     {"union_ci", interval_json(result.union_ci)},
                     {"reference", result.reference}});
  }
  emit_report(ec, {{"per_n", per_n}}, seconds);
  return 0;
}

int run_reconstruct(const ExperimentConfig& ec) {
  json per_n = json::array();
  std::vector<std::vector<double>> csv_rows;
  double seconds = 0.0;
  bool failed = false;
  for (int N : ec.n_list) {
    const auto spec = rmt::config::ensemble_from_name(ec.ensemble_v, N);
    const auto outcome = rmt::harness::run_trials(run_options(ec), [&](int, std::uint64_t seed) {
      const auto sample = rmt::sample_matrix(spec, seed);
      const auto sd = rmt::eigendecompose(sample.H, true);
      const auto rec = rmt::resolvent::reconstruct_overlap_edge(
          sd, ec.alpha, 1, 1, ec.eps, ec.c1_power, ec.c2_power);
      const double truth = rmt::eigenvector_overlap(sd, ec.alpha, 1, 1).real();
      const double rel_err = std::abs(rec.value.real() - truth) / std::abs(truth);
      return std::vector<double>{rec.value.real(), truth, rel_err,
                                 rec.quality ? 1.0 : 0.0};
    });
    seconds += outcome.seconds;
    failed = failed || outcome.failure_threshold_exceeded;

    std::vector<double> errs;
    int quality = 0;
    for (std::size_t k = 0; k < outcome.samples.size(); ++k) {
      const auto& row = outcome.samples[k];
      if (row[3] > 0.5) {
        errs.push_back(row[2]);
        ++quality;
      }
      csv_rows.push_back({static_cast<double>(N),
                          static_cast<double>(outcome.trial_index[k]), row[0], row[1],
                          row[2], row[3]});
    }
    const double skip_fraction =
        1.0 - static_cast<double>(quality) / std::max<std::size_t>(1, outcome.samples.size());
    const bool skip_flag = skip_fraction >= 0.05;
    failed = failed || skip_flag;
    per_n.push_back({{"N", N},
                     {"trials_ok", outcome.samples.size()},
                     {"quality_trials", quality},
                     {"skip_fraction", skip_fraction},
                     {"skip_flagged", skip_flag},
                     {"median_rel_err", median(errs)},
                     {"failures", failures_json(outcome)}});
  }
  emit_csv(ec, {"N", "trial", "reconstructed", "direct", "rel_err", "quality"}, csv_rows);
  emit_report(ec, {{"per_n", per_n}}, seconds);
  return failed ? 1 : 0;
}

int run_compare(const ExperimentConfig& ec) {
  if (ec.ensemble_w.empty())
    throw std::invalid_argument("compare: ensemble.w must be set");
  rmt::comparison::ObservableSpec obs;
  const bool edge = ec.region == "edge";
  obs.eigenvector_terms.push_back({ec.alpha, 1, 1});
  obs.theta = [](const std::vector<double>& args) { return args[0]; };

  auto factory = [&](const std::string& name) {
    return [&, name](int N) {
      return rmt::config::ensemble_from_name(name, N);
    };
  };
  // Bulk runs track the middle of the spectrum; the alpha knob is edge-only.
  rmt::comparison::EnsembleFactory fv = factory(ec.ensemble_v);
  rmt::comparison::EnsembleFactory fw = factory(ec.ensemble_w);

  const auto t0 = std::chrono::steady_clock::now();
  rmt::comparison::ComparisonReport report;
  if (edge) {
    report = rmt::comparison::universality_experiment(fv, fw, obs, ec.n_list, ec.trials,
                                                      ec.root_seed, ec.parallelism);
  } else {
    report.root_seed = ec.root_seed;
    report.trials = ec.trials;
    for (int N : ec.n_list) {
      rmt::comparison::ObservableSpec bulk_obs;
      bulk_obs.eigenvector_terms.push_back({N / 2, 1, 1});
      bulk_obs.theta = obs.theta;
      auto sub = rmt::comparison::universality_experiment(fv, fw, bulk_obs, {N}, ec.trials,
                                                          ec.root_seed, ec.parallelism);
      report.per_n.push_back(std::move(sub.per_n[0]));
      report.skip_flagged = report.skip_flagged || sub.skip_flagged;
    }
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  json per_n = json::array();
  std::vector<std::vector<double>> csv_rows;
  for (const auto& row : report.per_n) {
    per_n.push_back({{"N", row.N},
                     {"ks", row.ks},
                     {"mean_difference", row.mean_difference},
                     {"difference_ci", interval_json(row.difference_ci)},
                     {"skipped_v", row.skipped_v},
                     {"skipped_w", row.skipped_w}});
    for (std::size_t k = 0; k < row.samples_v.size(); ++k)
      csv_rows.push_back({static_cast<double>(row.N), 0.0, row.samples_v[k]});
    for (std::size_t k = 0; k < row.samples_w.size(); ++k)
      csv_rows.push_back({static_cast<double>(row.N), 1.0, row.samples_w[k]});
  }
  emit_csv(ec, {"N", "ensemble", "observable"}, csv_rows);
  emit_report(ec, {{"per_n", per_n}, {"skip_flagged", report.skip_flagged}}, seconds);
  return report.skip_flagged ? 1 : 0;
}

int run_gfct(const ExperimentConfig& ec) {
  if (ec.ensemble_w.empty()) throw std::invalid_argument("gfct: ensemble.w must be set");
  json per_n = json::array();
  double seconds = 0.0;
  for (int N : ec.n_list) {
    const auto v = rmt::config::ensemble_from_name(ec.ensemble_v, N);
    const auto w = rmt::config::ensemble_from_name(ec.ensemble_w, N);
    const double width = std::pow(static_cast<double>(N), -2.0 / 3.0);
    const auto t0 = std::chrono::steady_clock::now();
    const auto result = rmt::comparison::gfct_statistic(
        v, w, [](double x) { return x; }, -2.0 - width, -2.0 + width, ec.eps, ec.trials,
        ec.root_seed);
    seconds += std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    per_n.push_back({{"N", N},
                     {"mean_v", result.mean_v},
                     {"mean_w", result.mean_w},
                     {"difference", result.difference},
                     {"difference_ci", interval_json(result.difference_ci)},
                     {"reference_scale", result.reference_scale}});
  }
  emit_report(ec, {{"per_n", per_n}}, seconds);
  return 0;
}

int run_hs_check(const ExperimentConfig& ec) {
  json per_n = json::array();
  double seconds = 0.0;
  bool failed = false;
  for (int N : ec.n_list) {
    const auto spec = rmt::config::ensemble_from_name(ec.ensemble_v, N);
    const rmt::resolvent::SmoothedIndicator f{-1.0, 1.0, 1e-3};
    const auto outcome = rmt::harness::run_trials(run_options(ec), [&](int, std::uint64_t seed) {
      const auto sample = rmt::sample_matrix(spec, seed);
      const auto sd = rmt::eigendecompose(sample.H, false);
      const auto hs = rmt::resolvent::hs_trace(sd, f);
      double direct = 0.0;
      for (int b = 0; b < N; ++b) direct += f(sd.lambda(b));
      const double rel_err = std::abs(hs.value - direct) / std::max(1.0, std::abs(direct));
      return std::vector<double>{hs.value, direct, rel_err, hs.dropped_bound};
    });
    seconds += outcome.seconds;
    failed = failed || outcome.failure_threshold_exceeded;
    double worst = 0.0;
    for (const auto& row : outcome.samples) worst = std::max(worst, row[2]);
    per_n.push_back({{"N", N},
                     {"trials_ok", outcome.samples.size()},
                     {"worst_rel_err", worst},
                     {"failures", failures_json(outcome)}});
  }
  emit_report(ec, {{"per_n", per_n}}, seconds);
  return failed ? 1 : 0;
}

int run_selftest(const ExperimentConfig& ec) {
  json checks = json::array();
  bool ok = true;
  auto record = [&](const std::string& name, bool pass, double value) {
    checks.push_back({{"name", name}, {"pass", pass}, {"value", value}});
    ok = ok && pass;
  };

  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const std::complex<double> z(-3.0 + 6.0 * k / 99.0, 0.7);
    const auto m = rmt::semicircle::m_sc(z);
    worst = std::max(worst, std::abs(m + 1.0 / (z + m)));
  }
  record("m_sc_fixed_point", worst < 1e-12, worst);

  worst = 0.0;
  for (int alpha = 1; alpha <= 1000; ++alpha) {
    const double g = rmt::semicircle::classical_location(alpha, 1000);
    worst = std::max(worst, std::abs(rmt::semicircle::n_sc(g) - alpha / 1000.0));
  }
  record("classical_location_roundtrip", worst < 1e-12, worst);

  const double mass = rmt::resolvent::adaptive_simpson(
      [](double x) { return rmt::resolvent::theta_kernel(x, 0.05); }, -500.0, 500.0,
      1e-13, 0.01);
  const double truncated = 2.0 / std::numbers::pi * std::atan(500.0 / 0.05);
  record("theta_kernel_normalization", std::abs(mass - truncated) < 1e-9,
         std::abs(mass - truncated));

  const double ks = rmt::stats::ks_two_sample({1.0, 2.0, 3.0}, {1.5, 2.5});
  record("ks_hand_oracle", std::abs(ks - 1.0 / 3.0) < 1e-15, ks);

  const auto sched = rmt::comparison::ordering_map(100);
  record("ordering_map_gamma_max", sched.gamma_max == 5050, sched.gamma_max);

  emit_report(ec, {{"checks", checks}, {"ok", ok}}, 0.0);
  return ok ? 0 : 1;
}

int dispatch(const ExperimentConfig& ec) {
  if (ec.kind == "sample") return run_sample(ec);
  if (ec.kind == "locallaw") return run_locallaw(ec);
  if (ec.kind == "rigidity") return run_rigidity(ec);
  if (ec.kind == "deloc") return run_deloc(ec);
  if (ec.kind == "repulsion") return run_repulsion(ec);
  if (ec.kind == "reconstruct") return run_reconstruct(ec);
  if (ec.kind == "compare") return run_compare(ec);
  if (ec.kind == "gfct") return run_gfct(ec);
  if (ec.kind == "hs-check") return run_hs_check(ec);
  if (ec.kind == "selftest") return run_selftest(ec);
  throw std::invalid_argument("unknown experiment kind " + ec.kind);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monte Carlo laboratory for generalized Wigner ensembles"};
  app.require_subcommand(1);

  std::string config_path, out_path, csv_path, ensemble_v, ensemble_w, region;
  std::uint64_t seed = 0;
  bool seed_set = false;
  std::vector<int> n_override;
  int trials = 0, parallelism = 0;

  const std::vector<std::string> kinds = {"sample",    "locallaw",    "rigidity", "deloc",
                                          "repulsion", "reconstruct", "compare",  "gfct",
                                          "hs-check",  "selftest"};
  for (const auto& kind : kinds) {
    auto* sub = app.add_subcommand(kind);
    sub->add_option("--config", config_path, "config file (flat key=value with [sections])");
    sub->add_option("--seed", seed, "root seed")->each([&](const std::string&) { seed_set = true; });
    sub->add_option("--N", n_override, "matrix sizes");
    sub->add_option("--trials", trials, "Monte Carlo trials");
    sub->add_option("--parallelism", parallelism, "worker threads");
    sub->add_option("--out", out_path, "JSON report path (default stdout)");
    sub->add_option("--csv", csv_path, "per-trial CSV path");
    sub->add_option("--ensemble-v", ensemble_v, "first ensemble name");
    sub->add_option("--ensemble-w", ensemble_w, "second ensemble name");
    sub->add_option("--region", region, "edge or bulk");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    rmt::config::Config cfg;
    if (!config_path.empty()) cfg = rmt::config::Config::parse_file(config_path);
    cfg.set("experiment.kind", app.get_subcommands()[0]->get_name());
    ExperimentConfig ec = rmt::config::experiment_from_config(cfg);
    if (seed_set) ec.root_seed = seed;
    if (!n_override.empty()) ec.n_list = n_override;
    if (trials > 0) ec.trials = trials;
    if (parallelism > 0) ec.parallelism = parallelism;
    if (!out_path.empty()) ec.out_path = out_path;
    if (!csv_path.empty()) ec.csv_path = csv_path;
    if (!ensemble_v.empty()) ec.ensemble_v = ensemble_v;
    if (!ensemble_w.empty()) ec.ensemble_w = ensemble_w;
    if (!region.empty()) ec.region = region;
    ec.validate();
    return dispatch(ec);
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
