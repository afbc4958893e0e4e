// Copyright (c) 2026 the bestchoice authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: constants, decision-number tables, Monte Carlo
// experiments from JSON configs, verification suites, and horizon sweeps.
// Exit codes: 0 success, 1 verification failure, 2 usage/config error,
// 3 resource-guard error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <span>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bestchoice/decision.hpp"
#include "bestchoice/distribution.hpp"
#include "bestchoice/errors.hpp"
#include "bestchoice/io.hpp"
#include "bestchoice/simulate.hpp"
#include "bestchoice/strategy.hpp"
#include "bestchoice/verify.hpp"
#include "bestchoice/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open for writing: " + path);
  out << text;
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty())
    std::cout << text;
  else
    write_text_file(out_path, text);
}

// Every result written to a file gets a sidecar manifest it can be
// reproduced from.
void emit_manifest(const std::string& out_path, const std::string& command,
                   const std::string& config_json, std::uint64_t seed) {
  if (out_path.empty()) return;
  write_text_file(out_path + ".manifest.json",
                  bestchoice::io::make_manifest(command, config_json, seed,
                                                bestchoice::io::iso8601_now()));
}

int cmd_constants() {
  const bestchoice::LimitConstants limits = bestchoice::limit_constants();
  std::printf("c=%.10f\n", limits.c);
  std::printf("gamma=%.10f\n", limits.gamma);
  return kExitOk;
}

int cmd_decision_numbers(int n, const std::string& out_path) {
  const bestchoice::DecisionNumbers d = bestchoice::optimal_decision_numbers(n);
  std::vector<bestchoice::Distribution> iid(static_cast<std::size_t>(n),
                                            bestchoice::Distribution::uniform(0.0, 1.0));
  const bestchoice::Thresholds tau = bestchoice::thresholds_from_decision_numbers(iid, d);

  std::string csv = "i,d,tau\n";
  for (int i = 0; i < n; ++i) {
    csv += std::to_string(i + 1);
    csv += ',';
    csv += bestchoice::io::format_number(d.values[static_cast<std::size_t>(i)]);
    csv += ',';
    csv += bestchoice::io::format_number(tau.values[static_cast<std::size_t>(i)]);
    csv += '\n';
  }
  emit(out_path, csv);
  emit_manifest(out_path, "decision-numbers", "{\"n\": " + std::to_string(n) + "}", 0);
  return kExitOk;
}

int cmd_simulate(const std::string& config_path, const std::string& out_path, int workers) {
  const bestchoice::ExperimentConfig config = bestchoice::io::load_config(config_path);
  const bestchoice::SimulationResult result = bestchoice::run_experiment(config, workers);
  emit(out_path, bestchoice::io::serialize_result(result));
  emit_manifest(out_path, "simulate", bestchoice::io::serialize_config(config), config.seed);
  return kExitOk;
}

int cmd_verify(const std::string& suite, std::uint64_t seed) {
  bestchoice::verify::Report report;
  if (suite == "lemma1")
    report = bestchoice::verify::subset_bound_suite(seed);
  else if (suite == "negdep")
    report = bestchoice::verify::negdep_suite();
  else if (suite == "samples")
    report = bestchoice::verify::samples_suite(seed);
  else
    throw CLI::ValidationError("--suite", "unknown suite: " + suite);

  std::cout << (report.passed ? "PASS" : "FAIL") << " " << suite << ": " << report.detail << "\n";
  return report.passed ? kExitOk : kExitVerifyFailure;
}

int cmd_sweep(int n_min, int n_max, std::int64_t trials, std::uint64_t seed,
              const std::string& out_path, int workers) {
  if (n_min < 1 || n_max < n_min) throw std::invalid_argument("sweep: need 1 <= n-min <= n-max");
  const double gamma = bestchoice::gamma_limit(bestchoice::solve_c());

  std::string csv = "n,rate,stderr,formula,gamma\n";
  for (int n = n_min; n <= n_max; ++n) {
    std::vector<bestchoice::Distribution> iid(static_cast<std::size_t>(n),
                                              bestchoice::Distribution::uniform(0.0, 1.0));
    const bestchoice::DecisionNumbers d = bestchoice::optimal_decision_numbers(n);
    const bestchoice::SimulationResult r = bestchoice::run_with_decision_numbers(
        iid, d, trials, seed + static_cast<std::uint64_t>(n), workers);
    csv += std::to_string(n);
    csv += ',';
    csv += bestchoice::io::format_number(r.rate);
    csv += ',';
    csv += bestchoice::io::format_number(r.std_error);
    csv += ',';
    csv += bestchoice::io::format_number(r.reference_bound);
    csv += ',';
    csv += bestchoice::io::format_number(gamma);
    csv += '\n';
  }
  emit(out_path, csv);
  emit_manifest(out_path, "sweep",
                "{\"n_min\": " + std::to_string(n_min) + ", \"n_max\": " + std::to_string(n_max) +
                    ", \"trials\": " + std::to_string(trials) + ", \"seed\": " + std::to_string(seed) +
                    "}",
                seed);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Threshold policies for the secretary problem with known distributions"};
  app.set_version_flag("--version", bestchoice::kVersion);
  app.require_subcommand(1);

  auto* constants = app.add_subcommand("constants", "Print the constants c and gamma");

  int n = 1;
  std::string out_path;
  auto* decision = app.add_subcommand("decision-numbers", "Optimal decision numbers for horizon n");
  decision->add_option("--n", n, "horizon")->required();
  decision->add_option("--out", out_path, "output CSV path (default: stdout)");

  std::string config_path;
  std::string sim_out;
  int workers = 0;
  auto* simulate = app.add_subcommand("simulate", "Run a Monte Carlo experiment from a JSON config");
  simulate->add_option("--config", config_path, "experiment config JSON")->required();
  simulate->add_option("--out", sim_out, "result JSON path")->required();
  simulate->add_option("--workers", workers, "worker threads (0 = hardware)");

  std::string suite;
  std::uint64_t seed = 20260101;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", suite, "lemma1 | negdep | samples")->required();
  verify->add_option("--seed", seed, "master seed");

  int n_min = 1, n_max = 10;
  std::int64_t trials = 100000;
  std::string sweep_out;
  std::uint64_t sweep_seed = 20260101;
  int sweep_workers = 0;
  auto* sweep = app.add_subcommand("sweep", "Success rate vs horizon for IID Uniform(0,1)");
  sweep->add_option("--n-min", n_min, "smallest horizon");
  sweep->add_option("--n-max", n_max, "largest horizon");
  sweep->add_option("--trials", trials, "trials per horizon");
  sweep->add_option("--seed", sweep_seed, "master seed");
  sweep->add_option("--out", sweep_out, "output CSV path (default: stdout)");
  sweep->add_option("--workers", sweep_workers, "worker threads (0 = hardware)");

  try {
    app.parse(argc, argv);
    if (constants->parsed()) return cmd_constants();
    if (decision->parsed()) {
      if (n < 1) throw std::invalid_argument("decision-numbers: --n must be >= 1");
      return cmd_decision_numbers(n, out_path);
    }
    if (simulate->parsed()) return cmd_simulate(config_path, sim_out, workers);
    if (verify->parsed()) return cmd_verify(suite, seed);
    if (sweep->parsed()) return cmd_sweep(n_min, n_max, trials, sweep_seed, sweep_out, sweep_workers);
    return kExitUsage;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const bestchoice::size_error& e) {
    std::cerr << "error (resource guard): " << e.what() << "\n";
    return kExitGuard;
  } catch (const bestchoice::insufficient_samples_error& e) {
    std::cerr << "error (resource guard): " << e.what() << "; required samples: " << e.required_samples
              << "\n";
    return kExitGuard;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
