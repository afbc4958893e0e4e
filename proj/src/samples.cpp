// Copyright (c) 2026 the bestchoice authors
// SPDX-License-Identifier: Apache-2.0
#include "bestchoice/samples.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "bestchoice/decision.hpp"
#include "bestchoice/errors.hpp"

namespace bestchoice::samples {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kDeltaFloor = 1e-12;
constexpr std::int64_t kMinBucketOccupancy = 32;

// Bucket index k >= 1 with p in ((1+eps)^-k scale), i.e. the k whose target
// quantile 1/(1+eps)^k sits just at or below p. p = 1 maps to k = 0.
int bucket_index(double p, double epsilon) {
  if (p >= 1.0) return 0;
  const double k = std::ceil(-std::log(p) / std::log1p(epsilon));
  return static_cast<int>(k);
}

std::int64_t bucket_rank(std::int64_t m, int k, double epsilon) {
  const double mk = static_cast<double>(m) / std::pow(1.0 + epsilon, k);
  return static_cast<std::int64_t>(std::floor(mk));
}

}  // namespace

void validate(const EstimationParams& p) {
  // The accuracy guarantees are stated for epsilon at or below 1/10; the
  // estimator itself is well defined on all of (0, 1).
  if (!(p.epsilon > 0.0 && p.epsilon < 1.0))
    throw std::domain_error("estimation params: epsilon must lie in (0, 1)");
  if (!(p.delta > 0.0 && p.delta < 1.0))
    throw std::domain_error("estimation params: delta must lie in (0, 1)");
  if (!(p.eta > 0.0 && p.eta < 1.0))
    throw std::domain_error("estimation params: eta must lie in (0, 1)");
}

double skip_fraction(double epsilon) { return epsilon / 10.0; }

double bucket_ratio(double epsilon) {
  // f3(eps) = -eps / (100 ln eps); the estimator runs at f3 / 4.
  return -epsilon / (100.0 * std::log(epsilon)) / 4.0;
}

std::vector<double> empirical_thresholds(const SampleSet& samples, std::span<const double> p,
                                         const EstimationParams& params) {
  validate(params);
  if (samples.sorted.empty()) throw std::invalid_argument("empirical_thresholds: empty sample set");
  const std::int64_t m = samples.count();

  std::vector<double> out;
  out.reserve(p.size());
  for (double pi : p) {
    if (!(pi > params.delta))
      throw std::domain_error("empirical_thresholds: target probability must exceed delta");
    if (!(pi <= 1.0)) throw std::domain_error("empirical_thresholds: target probability above 1");
    const int k = bucket_index(pi, params.epsilon);
    if (k == 0) {
      out.push_back(samples.sorted.back());
      continue;
    }
    const std::int64_t rank = bucket_rank(m, k, params.epsilon);
    if (rank < 1) {
      const std::int64_t required =
          static_cast<std::int64_t>(std::ceil(std::pow(1.0 + params.epsilon, k)));
      throw insufficient_samples_error(
          "empirical_thresholds: sample set too small for the deepest bucket", required);
    }
    out.push_back(samples.sorted[static_cast<std::size_t>(rank - 1)]);
  }
  return out;
}

std::int64_t required_sample_size(const EstimationParams& params) {
  validate(params);
  const double eps = params.epsilon;
  const double buckets = -std::log(params.delta) / std::log1p(eps);
  const double bound = 3.0 * (1.0 + eps) * (1.0 + eps) / (eps * eps * params.delta) *
                       std::log(2.0 * (buckets + 2.0) / params.eta);
  return std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(bound)));
}

SampleSet max_samples_from_rows(const SampleTable& table) {
  if (table.columns.empty()) throw std::invalid_argument("max_samples_from_rows: no columns");
  const std::size_t m = table.columns[0].size();
  if (m == 0) throw std::invalid_argument("max_samples_from_rows: no rows");
  for (const auto& col : table.columns)
    if (col.size() != m) throw std::invalid_argument("max_samples_from_rows: ragged table");

  SampleSet out;
  out.sorted.resize(m);
  for (std::size_t r = 0; r < m; ++r) {
    double mx = table.columns[0][r];
    for (std::size_t cidx = 1; cidx < table.columns.size(); ++cidx)
      mx = std::max(mx, table.columns[cidx][r]);
    out.sorted[r] = mx;
  }
  std::sort(out.sorted.begin(), out.sorted.end());
  return out;
}

namespace {

struct PipelineTargets {
  std::vector<double> p;         // targets d_i^n for kept positions
  std::vector<bool> estimated;   // p_i > delta
  int skip_tail = 0;
  double delta = 0.0;
  EstimationParams est_params;
};

PipelineTargets pipeline_targets(int n, const EstimationParams& params) {
  validate(params);
  if (n < 1) throw std::domain_error("sample_based_policy: n must be >= 1");

  PipelineTargets t;
  const double f1 = skip_fraction(params.epsilon);
  t.skip_tail = static_cast<int>(std::ceil(f1 * n));
  t.skip_tail = std::min(t.skip_tail, n);
  t.delta = std::max(std::exp(-solve_c() / f1), kDeltaFloor);
  t.est_params = EstimationParams{bucket_ratio(params.epsilon), t.delta, params.eta};

  const DecisionNumbers d = optimal_decision_numbers(n);
  const int kept = n - t.skip_tail;
  t.p.resize(static_cast<std::size_t>(kept));
  t.estimated.resize(static_cast<std::size_t>(kept));
  for (int i = 0; i < kept; ++i) {
    t.p[static_cast<std::size_t>(i)] = decision_power(d.values[static_cast<std::size_t>(i)], n);
    t.estimated[static_cast<std::size_t>(i)] = t.p[static_cast<std::size_t>(i)] > t.delta;
  }
  return t;
}

}  // namespace

SampleBasedPlan sample_based_policy(int n, const EstimationParams& params, const SampleTable& table) {
  const PipelineTargets t = pipeline_targets(n, params);
  if (table.count() != n)
    throw std::invalid_argument("sample_based_policy: table column count must equal n");

  const SampleSet max_samples = max_samples_from_rows(table);

  std::vector<double> estimated_targets;
  for (std::size_t i = 0; i < t.p.size(); ++i)
    if (t.estimated[i]) estimated_targets.push_back(t.p[i]);
  const std::vector<double> estimated_values =
      empirical_thresholds(max_samples, estimated_targets, t.est_params);

  SampleBasedPlan plan;
  plan.skip_tail = t.skip_tail;
  plan.delta = t.delta;
  plan.epsilon_est = t.est_params.epsilon;
  plan.thresholds.assign(static_cast<std::size_t>(n), kInf);
  plan.estimated.assign(static_cast<std::size_t>(n), false);
  std::size_t next = 0;
  for (std::size_t i = 0; i < t.p.size(); ++i) {
    if (t.estimated[i]) {
      plan.thresholds[i] = estimated_values[next++];
      plan.estimated[i] = true;
    } else {
      plan.thresholds[i] = -kInf;  // accept any running maximum here
    }
  }
  return plan;
}

std::int64_t recommended_rows(int n, const EstimationParams& params) {
  const PipelineTargets t = pipeline_targets(n, params);
  std::int64_t rows = 1;
  for (std::size_t i = 0; i < t.p.size(); ++i) {
    if (!t.estimated[i]) continue;
    const int k = bucket_index(t.p[i], t.est_params.epsilon);
    if (k == 0) continue;
    const double need =
        std::ceil(static_cast<double>(kMinBucketOccupancy) * std::pow(1.0 + t.est_params.epsilon, k));
    rows = std::max(rows, static_cast<std::int64_t>(need));
  }
  return rows;
}

}  // namespace bestchoice::samples
