// Copyright (c) 2026 the bestchoice authors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <cmath>
#include <vector>

#include "bestchoice/decision.hpp"
#include "bestchoice/errors.hpp"
#include "bestchoice/random.hpp"
#include "bestchoice/samples.hpp"

using bestchoice::RandomStream;
using bestchoice::insufficient_samples_error;
using namespace bestchoice::samples;

namespace {

SampleSet ladder() {
  SampleSet s;
  for (int i = 1; i <= 10; ++i) s.sorted.push_back(i / 10.0);
  return s;
}

}  // namespace

TEST_CASE("empirical threshold bucket indexing") {
  const SampleSet s = ladder();
  const EstimationParams params{0.25, 0.05, 0.05};

  // p = 0.9: bucket 1, rank floor(10 / 1.25) = 8 -> eighth smallest
  CHECK(empirical_thresholds(s, std::vector<double>{0.9}, params)[0] == doctest::Approx(0.8));
  // p = 0.7: bucket 2, rank floor(10 / 1.5625) = 6
  CHECK(empirical_thresholds(s, std::vector<double>{0.7}, params)[0] == doctest::Approx(0.6));
  // p = 1 returns the largest sample
  CHECK(empirical_thresholds(s, std::vector<double>{1.0}, params)[0] == doctest::Approx(1.0));
}

TEST_CASE("empirical thresholds through the public surface") {
  const SampleSet s = ladder();
  const EstimationParams params{0.1, 0.05, 0.05};

  // p = 1 returns the largest sample
  CHECK(empirical_thresholds(s, std::vector<double>{1.0}, params)[0] == doctest::Approx(1.0));

  // p at the first bucket: k = 1, rank floor(10/1.1) = 9
  CHECK(empirical_thresholds(s, std::vector<double>{0.95}, params)[0] == doctest::Approx(0.9));

  // outputs always belong to the sample set, and monotone targets give
  // monotone thresholds
  RandomStream rs(88, 0);
  for (int rep = 0; rep < 50; ++rep) {
    std::vector<double> p;
    double level = 1.0;
    for (int i = 0; i < 6; ++i) {
      // floor at 0.15: the ten-sample ladder resolves buckets down to ~0.1
      p.push_back(std::max(0.15, level));
      level *= 0.55 + 0.4 * rs.next_uniform01();
    }
    const auto t = empirical_thresholds(s, p, params);
    for (std::size_t i = 0; i < t.size(); ++i) {
      CHECK(std::find(s.sorted.begin(), s.sorted.end(), t[i]) != s.sorted.end());
      if (i > 0) CHECK(t[i] <= t[i - 1] + 1e-15);
    }
  }

  // guards
  CHECK_THROWS_AS(empirical_thresholds(s, std::vector<double>{0.04}, params), std::domain_error);
  CHECK_THROWS_AS(empirical_thresholds(s, std::vector<double>{1.1}, params), std::domain_error);
  try {
    empirical_thresholds(s, std::vector<double>{0.051}, params);  // bucket ~31: needs m >= 19+
    FAIL("expected insufficient_samples_error");
  } catch (const insufficient_samples_error& e) {
    CHECK(e.required_samples > 10);
  }
}

TEST_CASE("required sample size") {
  const EstimationParams params{0.1, 0.1, 0.05};
  const std::int64_t m = required_sample_size(params);

  // direct recomputation of the planning bound
  const double buckets = -std::log(0.1) / std::log1p(0.1);
  const double direct = 3.0 * 1.1 * 1.1 / (0.01 * 0.1) * std::log(2.0 * (buckets + 2.0) / 0.05);
  CHECK(std::abs(static_cast<double>(m) - direct) <= 1.0);
  CHECK(std::abs(static_cast<double>(m) - 25000.0) / 25000.0 < 0.05);

  // vacuous guarantee still returns a positive count
  CHECK(required_sample_size({0.1, 0.1, 0.999999}) >= 1);

  // shrinking delta strictly increases the requirement
  CHECK(required_sample_size({0.1, 0.05, 0.05}) > m);
}

TEST_CASE("row-wise maxima") {
  SampleTable t;
  t.labels = {"a", "b"};
  t.columns = {{0.2, 0.5}, {0.9, 0.1}};
  const SampleSet s = max_samples_from_rows(t);
  CHECK(s.sorted == std::vector<double>{0.5, 0.9});

  SampleTable single;
  single.labels = {"x"};
  single.columns = {{0.3, 0.1, 0.2}};
  CHECK(max_samples_from_rows(single).sorted == std::vector<double>{0.1, 0.2, 0.3});

  SampleTable ragged;
  ragged.labels = {"a", "b"};
  ragged.columns = {{0.1, 0.2}, {0.3}};
  CHECK_THROWS_AS(max_samples_from_rows(ragged), std::invalid_argument);

  // empirical CDF of maxima of two uniforms at 0.5 is 0.25
  RandomStream rs(314, 0);
  SampleTable big;
  big.labels = {"u1", "u2"};
  big.columns.assign(2, {});
  for (int i = 0; i < 100000; ++i) {
    big.columns[0].push_back(rs.next_uniform01());
    big.columns[1].push_back(rs.next_uniform01());
  }
  const SampleSet maxima = max_samples_from_rows(big);
  const auto below = std::upper_bound(maxima.sorted.begin(), maxima.sorted.end(), 0.5);
  const double freq = static_cast<double>(below - maxima.sorted.begin()) / 100000.0;
  CHECK(std::abs(freq - 0.25) < 0.005);
}

TEST_CASE("sample based policy skip rule") {
  const EstimationParams params{0.1, 0.1, 0.05};
  // f1 = 0.01: one position dropped for n = 10, two for n = 200
  RandomStream rs(11, 0);
  SampleTable t10;
  t10.columns.assign(10, {});
  for (int r = 0; r < 4000; ++r)
    for (auto& col : t10.columns) col.push_back(rs.next_uniform01());
  const SampleBasedPlan plan = sample_based_policy(10, params, t10);
  CHECK(plan.skip_tail == 1);
  CHECK(std::isinf(plan.thresholds[9]));
  CHECK(plan.thresholds[9] > 0);
  for (int i = 0; i < 9; ++i) CHECK(std::isfinite(plan.thresholds[static_cast<std::size_t>(i)]));
  CHECK(plan.epsilon_est == doctest::Approx(-0.1 / (100.0 * std::log(0.1)) / 4.0));

  CHECK_THROWS_AS(sample_based_policy(9, params, t10), std::invalid_argument);

  // degenerate horizon: the single position falls inside the ignored tail
  SampleTable t1;
  t1.columns = {{0.1, 0.5, 0.9}};
  const SampleBasedPlan p1 = sample_based_policy(1, params, t1);
  CHECK(p1.skip_tail == 1);
  CHECK(std::isinf(p1.thresholds[0]));
}

TEST_CASE("insufficient rows carry the requirement") {
  const EstimationParams params{0.1, 0.1, 0.05};
  RandomStream rs(12, 0);
  SampleTable tiny;
  tiny.columns.assign(10, {});
  for (int r = 0; r < 50; ++r)
    for (auto& col : tiny.columns) col.push_back(rs.next_uniform01());
  try {
    sample_based_policy(10, params, tiny);
    FAIL("expected insufficient_samples_error");
  } catch (const insufficient_samples_error& e) {
    CHECK(e.required_samples > 50);
    CHECK(recommended_rows(10, params) >= e.required_samples);
  }
}

TEST_CASE("estimated thresholds track the true ones on IID uniform") {
  // For IID Uniform(0,1) the true threshold at position i is d_i itself.
  const int n = 10;
  const std::int64_t rows = 100000;
  const EstimationParams params{0.1, 0.1, 0.05};
  const bestchoice::DecisionNumbers d = bestchoice::optimal_decision_numbers(n);

  int all_within = 0;
  const int reps = 100;
  for (int rep = 0; rep < reps; ++rep) {
    RandomStream rs(6000 + rep, 0);
    SampleTable table;
    table.columns.assign(n, {});
    for (auto& col : table.columns) col.reserve(static_cast<std::size_t>(rows));
    for (std::int64_t r = 0; r < rows; ++r)
      for (auto& col : table.columns) col.push_back(rs.next_uniform01());

    const SampleBasedPlan plan = sample_based_policy(n, params, table);
    bool ok = true;
    for (int i = 0; i < n - plan.skip_tail; ++i) {
      if (!plan.estimated[static_cast<std::size_t>(i)]) continue;
      if (std::abs(plan.thresholds[static_cast<std::size_t>(i)] -
                   d.values[static_cast<std::size_t>(i)]) > 0.02)
        ok = false;
    }
    all_within += ok ? 1 : 0;
  }
  CHECK(all_within >= 95);
}
