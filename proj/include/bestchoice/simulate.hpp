// Copyright (c) 2026 the bestchoice authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bestchoice/decision.hpp"
#include "bestchoice/distribution.hpp"
#include "bestchoice/random.hpp"
#include "bestchoice/samples.hpp"
#include "bestchoice/stats.hpp"

namespace bestchoice {

enum class ExperimentMode { full_knowledge, sample_based };

// Everything a Monte Carlo experiment needs to be rerun bit-identically:
// the instance, the trial count, and the master seed. Sample-based runs add
// the accuracy parameter and either an explicit sample table or a row count
// for drawing one internally (0 = let the planner decide).
struct ExperimentConfig {
  std::vector<Distribution> distributions;
  std::int64_t trials = 0;
  std::uint64_t seed = 0;
  ExperimentMode mode = ExperimentMode::full_knowledge;
  std::optional<double> epsilon;
  std::optional<std::int64_t> samples_per_dist;
  std::optional<std::string> samples_csv;  // resolved path the table was loaded from
  std::optional<samples::SampleTable> sample_table;
};

void validate(const ExperimentConfig& config);

// Uniformly random permutation of 0..n-1 (Fisher-Yates with unbiased index
// draws), deterministic per stream.
std::vector<std::size_t> random_permutation(std::size_t n, RandomStream& rng);

// One experiment: per trial, draw X_i from each distribution, randomly order
// them, run the threshold policy, count wins. Trials are keyed by their index,
// so the result does not depend on the worker count. workers < 1 means one
// worker per hardware thread.
SimulationResult run_experiment(const ExperimentConfig& config, int workers = 1);

// Same trial loop with caller-supplied decision numbers instead of the
// optimal ones; reference_bound is the formula value for d.
SimulationResult run_with_decision_numbers(std::span<const Distribution> dists,
                                           const DecisionNumbers& d, std::int64_t trials,
                                           std::uint64_t seed, int workers = 1);

// Both sides of the randomly-chosen-subset inequality, exactly:
//   first  = sum over r-subsets of prod a  /  C(n, r)
//   second = (prod_k a_k)^{r/n}
// The first dominates the second (AM-GM). Exact symmetric-polynomial
// recurrence; guarded at n <= 20.
std::pair<double, double> subset_product_bound(std::span<const double> a, int r);

}  // namespace bestchoice
