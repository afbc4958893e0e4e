// Copyright (c) 2026 the bestchoice authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "bestchoice/augmented.hpp"
#include "bestchoice/stats.hpp"

namespace bestchoice::negdep {

// m balls dropped independently and uniformly into n bins. Bin counts are
// negatively dependent, which is exactly the regime the threshold policy's
// guarantee extends to.
struct BallsBinsModel {
  int balls = 0;  // m >= 0
  int bins = 0;   // n >= 1
};

// log Pr[every bin of A gets at most T balls] for every subset A, with an
// explicit marker for impossible events instead of IEEE -inf arithmetic.
struct SubsetLogTable {
  int n = 0;
  int cap = 0;
  std::vector<std::optional<double>> g;  // indexed by bitmask; nullopt = probability 0

  bool impossible(std::uint32_t mask) const { return !g[mask].has_value(); }
};

struct SubmodularityReport {
  bool ok = true;
  std::uint32_t a = 0;  // first violating pair when !ok
  std::uint32_t b = 0;
};

// Exact Pr[every bin in `mask` receives <= cap balls], by dynamic
// programming over ball placements with 128-bit integer counts. Throws
// size_error when m log2(n) exceeds the 128-bit range.
double joint_max_probability(const BallsBinsModel& model, std::uint32_t mask, int cap);

// Same probability by brute-force enumeration of all n^m outcomes; the
// cross-check oracle. Guarded at n^m <= 1e7.
double enumerate_joint_max_probability(const BallsBinsModel& model, std::uint32_t mask, int cap);

// g(A) = log joint_max_probability(A) for all 2^n subsets; n <= 20.
SubsetLogTable build_subset_log_table(const BallsBinsModel& model, int cap);

// g(A) + g(B) >= g(A u B) + g(A n B) for every pair, within 1e-12.
SubmodularityReport check_submodular(const SubsetLogTable& table);

// (r/n) g([n]) <= average of g over size-r subsets, within 1e-12.
bool check_hans(const SubsetLogTable& table, int r);

// (average over r-subsets of Pr[max over A <= cap],  Pr[max over all <= cap]^{r/n});
// the first must dominate the second.
std::pair<double, double> random_subset_bound(const BallsBinsModel& model, int cap, int r);

// Pr[max bin count <= t], exact.
double max_count_cdf(const BallsBinsModel& model, int t);

// Exact augmented threshold for the bin-count maximum: the lexicographically
// smallest (t, u) with Pr[augmented max <= (t, u)] = p, where every bin
// carries an independent uniform tiebreak. The boundary layer
// Pr[exactly s bins at count t, the rest below] makes this a polynomial in
// u, solved by bisection.
AugmentedValue count_threshold(const BallsBinsModel& model, double p);

// Secretary over bins presented in random order: thresholds from the
// optimal decision numbers through count_threshold, win when the selected
// bin holds the (augmented) maximum count. reference_bound is gamma.
SimulationResult simulate_balls_bins_secretary(const BallsBinsModel& model, std::int64_t trials,
                                               std::uint64_t seed, int workers = 1);

}  // namespace bestchoice::negdep
