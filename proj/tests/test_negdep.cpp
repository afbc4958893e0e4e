// Copyright (c) 2026 the bestchoice authors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <vector>

#include "bestchoice/decision.hpp"
#include "bestchoice/errors.hpp"
#include "bestchoice/negdep.hpp"
#include "oracles.hpp"

using bestchoice::negdep::BallsBinsModel;
using bestchoice::negdep::build_subset_log_table;
using bestchoice::negdep::check_hans;
using bestchoice::negdep::random_subset_bound;
using bestchoice::negdep::check_submodular;
using bestchoice::negdep::joint_max_probability;
using bestchoice::negdep::SubsetLogTable;

TEST_CASE("joint max probability, small exact cases") {
  const BallsBinsModel m22{2, 2};
  CHECK(joint_max_probability(m22, 0b01, 1) == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(joint_max_probability(m22, 0b11, 1) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(joint_max_probability(m22, 0, 1) == 1.0);

  // against the direct outcome walk
  for (int n = 1; n <= 3; ++n)
    for (int m = 0; m <= 4; ++m)
      for (int cap = 0; cap <= m; ++cap)
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
          CHECK(joint_max_probability({m, n}, mask, cap) ==
                doctest::Approx(oracles::balls_bins_direct(m, n, mask, cap)).epsilon(1e-12));

  // full set with cap = m is certain, exactly
  CHECK(joint_max_probability({5, 3}, 0b111, 5) == 1.0);
  CHECK(joint_max_probability({24, 8}, 0xFF, 24) == 1.0);

  CHECK_THROWS_AS(joint_max_probability({200, 10}, 1, 3), bestchoice::size_error);
}

TEST_CASE("subset log table") {
  const SubsetLogTable t = build_subset_log_table({2, 2}, 1);
  CHECK(*t.g[0b01] == doctest::Approx(std::log(0.75)));
  CHECK(*t.g[0b10] == doctest::Approx(std::log(0.75)));
  CHECK(*t.g[0b11] == doctest::Approx(std::log(0.5)));
  CHECK(*t.g[0] == 0.0);

  // vacuous cap: g identically zero
  const SubsetLogTable vac = build_subset_log_table({3, 3}, 3);
  for (const auto& g : vac.g) CHECK(*g == doctest::Approx(0.0));

  // one ball must land somewhere
  const SubsetLogTable imp = build_subset_log_table({1, 2}, 0);
  CHECK(*imp.g[0b01] == doctest::Approx(std::log(0.5)));
  CHECK(imp.impossible(0b11));

  CHECK_THROWS_AS(build_subset_log_table({2, 21}, 1), bestchoice::size_error);
}

TEST_CASE("submodularity checks") {
  CHECK(check_submodular(build_subset_log_table({2, 2}, 1)).ok);

  // modular tables pass with equality
  SubsetLogTable modular;
  modular.n = 3;
  modular.cap = 0;
  modular.g.resize(8);
  for (std::uint32_t mask = 0; mask < 8; ++mask)
    modular.g[mask] = -static_cast<double>(__builtin_popcount(mask));
  CHECK(check_submodular(modular).ok);

  // hand-built violation
  SubsetLogTable bad;
  bad.n = 2;
  bad.cap = 0;
  bad.g = {0.0, -1.0, -1.0, -1.0};
  const auto report = check_submodular(bad);
  CHECK_FALSE(report.ok);
  CHECK((report.a | report.b) == 0b11);
}

TEST_CASE("size-r averaging inequality") {
  const SubsetLogTable t = build_subset_log_table({2, 2}, 1);
  CHECK(check_hans(t, 1));  // 0.5 log(1/2) <= log(3/4)
  CHECK(check_hans(t, 2));  // equality at r = n

  for (int n = 1; n <= 4; ++n)
    for (int m = 0; m <= 5; ++m)
      for (int cap = 0; cap <= m; ++cap) {
        const SubsetLogTable table = build_subset_log_table({m, n}, cap);
        for (int r = 1; r <= n; ++r) CHECK(check_hans(table, r));
      }
}

TEST_CASE("randomly chosen subsets dominate the power bound") {
  const auto [lhs, rhs] = random_subset_bound({2, 2}, 1, 1);
  CHECK(lhs == doctest::Approx(0.75));
  CHECK(rhs == doctest::Approx(std::sqrt(0.5)));

  const auto [l2, r2] = random_subset_bound({2, 2}, 1, 2);
  CHECK(l2 == doctest::Approx(r2));

  for (int r = 1; r <= 4; ++r) {
    const auto [l, rb] = random_subset_bound({5, 4}, 2, r);
    CHECK(l >= rb - 1e-12);
  }
}

TEST_CASE("count thresholds invert the augmented max cdf") {
  const BallsBinsModel model{5, 3};
  // layered cdf at (t, u): sum_s Pr[exactly s bins at t, rest below] u^s,
  // recomputed here from the direct outcome walk
  const auto direct_layer = [&](int t, double u) {
    std::int64_t total = 1;
    for (int i = 0; i < model.balls; ++i) total *= model.bins;
    double acc = 0.0;
    for (std::int64_t code = 0; code < total; ++code) {
      std::int64_t c = code;
      std::vector<int> counts(static_cast<std::size_t>(model.bins), 0);
      for (int i = 0; i < model.balls; ++i) {
        counts[static_cast<std::size_t>(c % model.bins)]++;
        c /= model.bins;
      }
      int at = 0;
      bool over = false;
      for (int b = 0; b < model.bins; ++b) {
        if (counts[static_cast<std::size_t>(b)] > t) over = true;
        if (counts[static_cast<std::size_t>(b)] == t) ++at;
      }
      if (!over) acc += std::pow(u, at);
    }
    return acc / static_cast<double>(total);
  };

  for (double p : {0.02, 0.1, 0.37, 0.62, 0.9, 0.999}) {
    const auto tau = bestchoice::negdep::count_threshold(model, p);
    const int t = static_cast<int>(tau.primary);
    CHECK(direct_layer(t, tau.tiebreak) == doctest::Approx(p).epsilon(1e-9));
  }

  // boundary targets
  const auto zero = bestchoice::negdep::count_threshold(model, 0.0);
  CHECK(zero.primary == 2.0);  // five balls in three bins force a count of 2
  CHECK(zero.tiebreak == 0.0);
  const auto one = bestchoice::negdep::count_threshold(model, 1.0);
  CHECK(one.primary == 5.0);
  CHECK(one.tiebreak == 1.0);
}

TEST_CASE("balls and bins secretary") {
  // single bin: always picked, always the maximum
  const auto single = bestchoice::negdep::simulate_balls_bins_secretary({3, 1}, 2000, 11, 2);
  CHECK(single.rate == 1.0);

  // zero balls: augmented values are IID uniform, so the IID formula applies
  const int n = 6;
  const auto zero_balls = bestchoice::negdep::simulate_balls_bins_secretary({0, n}, 100000, 12, 2);
  const double formula =
      bestchoice::success_probability(bestchoice::optimal_decision_numbers(n));
  CHECK(std::abs(zero_balls.rate - formula) <= 3.0 * zero_balls.std_error);

  // reproducibility across worker counts
  const auto a = bestchoice::negdep::simulate_balls_bins_secretary({24, 8}, 20000, 13, 1);
  const auto b = bestchoice::negdep::simulate_balls_bins_secretary({24, 8}, 20000, 13, 3);
  CHECK(a == b);

  // the gamma guarantee at a quick scale (acceptance reruns this at 1e5)
  CHECK(a.rate >= a.reference_bound - 3.0 * a.std_error);
}
