// Copyright (c) 2026 the bestchoice authors
// SPDX-License-Identifier: Apache-2.0
#include "bestchoice/stats.hpp"

#include <cmath>
#include <stdexcept>

namespace bestchoice {

SimulationResult summarize_bernoulli(std::int64_t wins, std::int64_t trials, double reference_bound) {
  if (trials < 1) throw std::invalid_argument("summarize_bernoulli: trials must be >= 1");
  if (wins < 0 || wins > trials) throw std::invalid_argument("summarize_bernoulli: wins out of range");

  constexpr double z = 1.959963984540054;  // 97.5% normal quantile
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(wins) / n;

  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (p + z2 / (2.0 * n)) / denom;
  const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;

  SimulationResult r;
  r.trials = trials;
  r.wins = wins;
  r.rate = p;
  r.ci95_low = center - half;
  r.ci95_high = center + half;
  r.std_error = half / z;
  r.reference_bound = reference_bound;
  return r;
}

}  // namespace bestchoice
