// Copyright (c) 2026 the bestchoice authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

namespace bestchoice {

// Aggregate of a Monte Carlo run. The confidence interval is the 95% Wilson
// score interval, and std_error is its half-width divided by z, which keeps
// the error bar meaningful at rates of exactly 0 or 1.
struct SimulationResult {
  std::int64_t trials = 0;
  std::int64_t wins = 0;
  double rate = 0.0;
  double std_error = 0.0;
  double ci95_low = 0.0;
  double ci95_high = 0.0;
  double reference_bound = 0.0;  // formula value, gamma, or gamma - epsilon

  friend bool operator==(const SimulationResult&, const SimulationResult&) = default;
};

// Builds a SimulationResult from raw counts plus the reference bound.
SimulationResult summarize_bernoulli(std::int64_t wins, std::int64_t trials, double reference_bound);

}  // namespace bestchoice
