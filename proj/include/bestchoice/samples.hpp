// Copyright (c) 2026 the bestchoice authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace bestchoice::samples {

// Sorted samples of one distribution (here, always the max-distribution).
struct SampleSet {
  std::vector<double> sorted;  // nondecreasing, nonempty

  std::int64_t count() const { return static_cast<std::int64_t>(sorted.size()); }
};

// Parameters of the order-statistic estimator. epsilon is the bucket ratio
// (quantile targets are powers of 1/(1+epsilon)), delta the smallest
// admissible target probability, eta the acceptable failure probability of
// the simultaneous guarantee.
struct EstimationParams {
  double epsilon = 0.1;  // in (0, 1/10]
  double delta = 0.1;    // in (0, 1)
  double eta = 0.05;     // in (0, 1)
};

// Rectangular table of per-distribution samples: one column per
// distribution, one independent sample row per line.
struct SampleTable {
  std::vector<std::string> labels;
  std::vector<std::vector<double>> columns;

  std::int64_t rows() const { return columns.empty() ? 0 : static_cast<std::int64_t>(columns[0].size()); }
  int count() const { return static_cast<int>(columns.size()); }
};

// Per-position output of the sample-based pipeline. A position is either
// skipped (never accept), estimated (finite threshold taken from the
// samples), or unbinding (target probability at or below delta; any running
// maximum is acceptable there, matching the full-knowledge p -> 0 limit).
struct SampleBasedPlan {
  std::vector<double> thresholds;  // +inf skipped, -inf unbinding
  std::vector<bool> estimated;
  int skip_tail = 0;
  double delta = 0.0;          // derived target-probability floor
  double epsilon_est = 0.0;    // derived bucket ratio f3(eps)/4
};

void validate(const EstimationParams& p);

// Order-statistic thresholds: p_i in ((1+eps)^-k, (1+eps)^-(k-1)] picks the
// floor(m / (1+eps)^k)-th smallest sample; p_i = 1 picks the largest sample.
// Throws std::domain_error for p_i <= delta or p_i > 1, and
// insufficient_samples_error when the deepest bucket has no sample.
std::vector<double> empirical_thresholds(const SampleSet& samples, std::span<const double> p,
                                         const EstimationParams& params);

// Smallest m making the Chernoff/union failure bound at most eta:
//   m >= 3 (1+eps)^2 / (eps^2 delta) * ln( 2 (L + 2) / eta ),  L = -ln delta / ln(1+eps).
std::int64_t required_sample_size(const EstimationParams& params);

// Row-wise maxima of a rectangular table, sorted: m independent samples of
// the distribution of the maximum. Throws on ragged input.
SampleSet max_samples_from_rows(const SampleTable& table);

// Full pipeline: optimal decision numbers for horizon n, targets
// p_i = d_i^n, tail skip of ceil(f1(eps) * n) positions, thresholds
// estimated from the row-wise max samples with bucket ratio f3(eps)/4 and
// floor delta = max(e^{-c/f1(eps)}, 1e-12).
SampleBasedPlan sample_based_policy(int n, const EstimationParams& params, const SampleTable& table);

// Rows needed before sample_based_policy can resolve every estimated
// position with a comfortably occupied deepest bucket.
std::int64_t recommended_rows(int n, const EstimationParams& params);

// f-functions used by the pipeline.
double skip_fraction(double epsilon);      // f1 = eps / 10
double bucket_ratio(double epsilon);       // f3 / 4 with f3 = -eps / (100 ln eps)

}  // namespace bestchoice::samples
