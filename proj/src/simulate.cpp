// Copyright (c) 2026 the bestchoice authors
// SPDX-License-Identifier: Apache-2.0
#include "bestchoice/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "bestchoice/detail/trial_pool.hpp"
#include "bestchoice/errors.hpp"
#include "bestchoice/strategy.hpp"

namespace bestchoice {
namespace {

using detail::count_over_trials;

// Substream roles within one trial; fixed order is part of the
// reproducibility contract.
constexpr std::uint64_t kRoleDraws = 0;
constexpr std::uint64_t kRolePermutation = 1;
constexpr std::uint64_t kRoleTiebreaks = 2;

// Stream index namespace for the sampling phase, disjoint from trial
// indices.
constexpr std::uint64_t kSampleStreamIndex = 1ULL << 63;

bool any_atoms(std::span<const Distribution> dists) {
  return std::any_of(dists.begin(), dists.end(), [](const Distribution& d) { return d.has_atoms(); });
}

template <typename Value>
bool run_trial(std::span<const Distribution> dists, std::span<const Value> thresholds,
               std::uint64_t seed, std::int64_t trial) {
  const std::size_t n = dists.size();
  RandomStream trial_stream(seed, static_cast<std::uint64_t>(trial));
  RandomStream draw_rs = trial_stream.substream(kRoleDraws);
  RandomStream perm_rs = trial_stream.substream(kRolePermutation);
  RandomStream tie_rs = trial_stream.substream(kRoleTiebreaks);

  std::vector<double> x(n);
  for (std::size_t k = 0; k < n; ++k) x[k] = dists[k].sample(draw_rs);
  const std::vector<std::size_t> order = random_permutation(n, perm_rs);

  std::vector<Value> presented(n);
  if constexpr (std::is_same_v<Value, AugmentedValue>) {
    std::vector<double> u(n);
    for (std::size_t k = 0; k < n; ++k) u[k] = tie_rs.next_uniform01();
    for (std::size_t j = 0; j < n; ++j) presented[j] = AugmentedValue{x[order[j]], u[order[j]]};
  } else {
    for (std::size_t j = 0; j < n; ++j) presented[j] = x[order[j]];
  }
  return run_episode<Value>(presented, thresholds).win;
}

SimulationResult run_threshold_experiment(std::span<const Distribution> dists,
                                          const DecisionNumbers& d, std::int64_t trials,
                                          std::uint64_t seed, int workers, double reference) {
  if (static_cast<int>(dists.size()) != d.horizon())
    throw std::invalid_argument("run: distribution count must equal horizon");
  std::int64_t wins = 0;
  if (any_atoms(dists)) {
    const AugmentedThresholds thr = augmented_thresholds_from_decision_numbers(dists, d);
    wins = count_over_trials(trials, workers, [&](std::int64_t t) {
      return run_trial<AugmentedValue>(dists, thr.values, seed, t) ? 1 : 0;
    });
  } else {
    const Thresholds thr = thresholds_from_decision_numbers(dists, d);
    wins = count_over_trials(trials, workers, [&](std::int64_t t) {
      return run_trial<double>(dists, thr.values, seed, t) ? 1 : 0;
    });
  }
  return summarize_bernoulli(wins, trials, reference);
}

samples::SampleTable draw_sample_table(std::span<const Distribution> dists, std::int64_t rows,
                                       std::uint64_t seed) {
  samples::SampleTable table;
  table.columns.assign(dists.size(), {});
  for (auto& col : table.columns) col.resize(static_cast<std::size_t>(rows));
  for (const auto& d : dists) table.labels.push_back(d.kind_name());
  RandomStream rs(seed, kSampleStreamIndex);
  for (std::int64_t r = 0; r < rows; ++r)
    for (std::size_t k = 0; k < dists.size(); ++k)
      table.columns[k][static_cast<std::size_t>(r)] = dists[k].sample(rs);
  return table;
}

SimulationResult run_sample_based(const ExperimentConfig& config, int workers) {
  const auto& dists = config.distributions;
  if (any_atoms(dists))
    throw std::invalid_argument("sample-based mode requires atomless distributions");
  const int n = static_cast<int>(dists.size());
  samples::EstimationParams params;
  params.epsilon = *config.epsilon;

  samples::SampleTable drawn;
  const samples::SampleTable* table = nullptr;
  if (config.sample_table.has_value()) {
    table = &*config.sample_table;
  } else {
    const std::int64_t rows = config.samples_per_dist.value_or(0) > 0
                                  ? *config.samples_per_dist
                                  : samples::recommended_rows(n, params);
    drawn = draw_sample_table(dists, rows, config.seed);
    table = &drawn;
  }

  const samples::SampleBasedPlan plan = samples::sample_based_policy(n, params, *table);
  const double gamma = gamma_limit(solve_c());
  const std::int64_t wins = count_over_trials(config.trials, workers, [&](std::int64_t t) {
    return run_trial<double>(dists, plan.thresholds, config.seed, t) ? 1 : 0;
  });
  return summarize_bernoulli(wins, config.trials, gamma - params.epsilon);
}

}  // namespace

void validate(const ExperimentConfig& config) {
  if (config.distributions.empty()) throw std::invalid_argument("config: needs at least one distribution");
  if (config.trials < 1) throw std::invalid_argument("config: trials must be >= 1");
  const bool sample_based = config.mode == ExperimentMode::sample_based;
  if (sample_based && !config.epsilon.has_value())
    throw std::invalid_argument("config: sample-based mode requires epsilon");
  if (!sample_based && (config.epsilon || config.samples_per_dist || config.sample_table))
    throw std::invalid_argument("config: sample parameters are only valid in sample-based mode");
  if (config.sample_table.has_value() &&
      config.sample_table->count() != static_cast<int>(config.distributions.size()))
    throw std::invalid_argument("config: sample table width must match distribution count");
}

std::vector<std::size_t> random_permutation(std::size_t n, RandomStream& rng) {
  if (n < 1) throw std::invalid_argument("random_permutation: n must be >= 1");
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  for (std::size_t i = n - 1; i > 0; --i) {
    const std::size_t j = static_cast<std::size_t>(rng.next_below(i + 1));
    std::swap(perm[i], perm[j]);
  }
  return perm;
}

SimulationResult run_experiment(const ExperimentConfig& config, int workers) {
  validate(config);
  if (config.mode == ExperimentMode::sample_based) return run_sample_based(config, workers);
  const int n = static_cast<int>(config.distributions.size());
  const DecisionNumbers d = optimal_decision_numbers(n);
  return run_threshold_experiment(config.distributions, d, config.trials, config.seed, workers,
                                  success_probability(d));
}

SimulationResult run_with_decision_numbers(std::span<const Distribution> dists,
                                           const DecisionNumbers& d, std::int64_t trials,
                                           std::uint64_t seed, int workers) {
  if (trials < 1) throw std::invalid_argument("run_with_decision_numbers: trials must be >= 1");
  return run_threshold_experiment(dists, d, trials, seed, workers, success_probability(d));
}

std::pair<double, double> subset_product_bound(std::span<const double> a, int r) {
  const int n = static_cast<int>(a.size());
  if (n < 1) throw std::invalid_argument("subset_product_bound: empty probability vector");
  if (n > 20) throw size_error("subset_product_bound: exact subset averaging capped at n <= 20");
  if (r < 1 || r > n) throw std::domain_error("subset_product_bound: r out of range");
  for (double ak : a)
    if (!(ak >= 0.0 && ak <= 1.0)) throw std::domain_error("subset_product_bound: entries must lie in [0, 1]");

  // e_r(a) by the elementary-symmetric-polynomial recurrence.
  std::vector<double> e(static_cast<std::size_t>(r) + 1, 0.0);
  e[0] = 1.0;
  for (int k = 0; k < n; ++k)
    for (int j = std::min(r, k + 1); j >= 1; --j)
      e[static_cast<std::size_t>(j)] += e[static_cast<std::size_t>(j - 1)] * a[static_cast<std::size_t>(k)];

  double binom = 1.0;
  for (int j = 1; j <= r; ++j) binom = binom * (n - r + j) / j;

  double prod = 1.0;
  for (double ak : a) prod *= ak;
  const double power = prod <= 0.0 ? 0.0 : std::pow(prod, static_cast<double>(r) / n);

  return {e[static_cast<std::size_t>(r)] / binom, power};
}

}  // namespace bestchoice
