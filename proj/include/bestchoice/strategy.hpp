// Copyright (c) 2026 the bestchoice authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "bestchoice/augmented.hpp"
#include "bestchoice/decision.hpp"
#include "bestchoice/distribution.hpp"

namespace bestchoice {

// Per-position acceptance thresholds, nonincreasing in the position.
struct Thresholds {
  std::vector<double> values;
};

// Same, in augmented (value, tiebreak) space for laws with atoms.
struct AugmentedThresholds {
  std::vector<AugmentedValue> values;
};

struct EpisodeOutcome {
  std::optional<std::size_t> picked;  // presentation position, 0-based
  std::size_t best = 0;               // position of the maximum
  bool win = false;                   // picked == best
};

// tau_i = product_max_quantile(dists, d_i^n): the policy's acceptance bar at
// position i makes "every draw below tau_i" an event of probability d_i^n.
Thresholds thresholds_from_decision_numbers(std::span<const Distribution> dists,
                                            const DecisionNumbers& d);

// Augmented-space analogue, exact for distributions with atoms.
AugmentedThresholds augmented_thresholds_from_decision_numbers(std::span<const Distribution> dists,
                                                               const DecisionNumbers& d);

// Stepwise form of the threshold policy: feed observations in presentation
// order; step() returns true exactly when the policy accepts (observation is
// a strict running maximum and strictly above its threshold). Steps must be
// consumed in order; anything else is a usage error.
template <typename Value>
class PolicyRun {
 public:
  explicit PolicyRun(std::span<const Value> thresholds) : thresholds_(thresholds) {}

  bool step(std::size_t i, const Value& observation) {
    if (i != next_) throw std::logic_error("policy step out of order");
    if (i >= thresholds_.size()) throw std::logic_error("policy step past horizon");
    ++next_;
    const bool is_running_max = i == 0 || observation > running_max_;
    if (is_running_max) running_max_ = observation;
    return is_running_max && observation > thresholds_[i];
  }

 private:
  std::span<const Value> thresholds_;
  std::size_t next_ = 0;
  Value running_max_{};
};

// Runs one episode of the threshold policy over draws in presentation order,
// stopping at the first accepted observation.
template <typename Value>
EpisodeOutcome run_episode(std::span<const Value> draws, std::span<const Value> thresholds) {
  if (draws.size() != thresholds.size())
    throw std::invalid_argument("run_episode: draws/thresholds length mismatch");
  EpisodeOutcome out;
  std::size_t best = 0;
  for (std::size_t i = 1; i < draws.size(); ++i)
    if (draws[best] < draws[i]) best = i;
  out.best = best;

  PolicyRun<Value> policy(thresholds);
  for (std::size_t i = 0; i < draws.size(); ++i) {
    if (policy.step(i, draws[i])) {
      out.picked = i;
      break;
    }
  }
  out.win = out.picked.has_value() && *out.picked == out.best;
  return out;
}

// Classical no-information rule for comparison: pass over an observation
// prefix, then take the first running maximum. Succeeds with probability
// about 1/e for large n.
EpisodeOutcome classical_baseline(std::span<const double> draws);

}  // namespace bestchoice
