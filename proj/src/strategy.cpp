// Copyright (c) 2026 the bestchoice authors
// SPDX-License-Identifier: Apache-2.0
#include "bestchoice/strategy.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace bestchoice {

Thresholds thresholds_from_decision_numbers(std::span<const Distribution> dists,
                                            const DecisionNumbers& d) {
  const int n = d.horizon();
  if (static_cast<int>(dists.size()) != n)
    throw std::invalid_argument("thresholds: distribution count must equal horizon");
  Thresholds out;
  out.values.reserve(d.values.size());
  for (double di : d.values)
    out.values.push_back(product_max_quantile(dists, decision_power(di, n)));
  return out;
}

AugmentedThresholds augmented_thresholds_from_decision_numbers(std::span<const Distribution> dists,
                                                               const DecisionNumbers& d) {
  const int n = d.horizon();
  if (static_cast<int>(dists.size()) != n)
    throw std::invalid_argument("thresholds: distribution count must equal horizon");
  AugmentedThresholds out;
  out.values.reserve(d.values.size());
  for (double di : d.values)
    out.values.push_back(augmented_product_max_quantile(dists, decision_power(di, n)));
  return out;
}

EpisodeOutcome classical_baseline(std::span<const double> draws) {
  if (draws.empty()) throw std::invalid_argument("classical_baseline: no draws");
  const std::size_t n = draws.size();
  // Observation prefix of ceil(n/e) draws, capped so at least one draw
  // remains selectable (n = 1 picks the only draw).
  const std::size_t observe =
      std::min(static_cast<std::size_t>(std::ceil(static_cast<double>(n) / std::numbers::e)), n - 1);

  EpisodeOutcome out;
  std::size_t best = 0;
  for (std::size_t i = 1; i < n; ++i)
    if (draws[best] < draws[i]) best = i;
  out.best = best;

  double running = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    const bool is_running_max = draws[i] > running;
    if (is_running_max) running = draws[i];
    if (i >= observe && is_running_max) {
      out.picked = i;
      break;
    }
  }
  out.win = out.picked.has_value() && *out.picked == out.best;
  return out;
}

}  // namespace bestchoice
