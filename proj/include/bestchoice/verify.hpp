// Copyright (c) 2026 the bestchoice authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>

namespace bestchoice::verify {

struct Report {
  bool passed = true;
  std::string detail;  // violating instance when failed, summary when passed
};

// 100 seeded random probability vectors (n <= 10), every r: the exact
// r-subset average must dominate the geometric power bound, with equality
// exactly on constant vectors.
Report subset_bound_suite(std::uint64_t seed);

// Every balls-and-bins model with m <= 6, n <= 4 and every cap: DP counts
// against brute-force enumeration, submodularity of the log table over all
// subset pairs, the size-r averaging inequality for all r, and the
// subset-average vs power-bound comparison for all r. Exact, 1e-12 slack.
Report negdep_suite();

// 200 repetitions of the order-statistic estimator on Uniform(0,1) at the
// planned sample size: the simultaneous two-sided quantile sandwich must
// hold in at least 90% of repetitions.
Report samples_suite(std::uint64_t seed);

}  // namespace bestchoice::verify
