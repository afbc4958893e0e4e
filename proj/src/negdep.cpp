// Copyright (c) 2026 the bestchoice authors
// SPDX-License-Identifier: Apache-2.0
#include "bestchoice/negdep.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "bestchoice/decision.hpp"
#include "bestchoice/detail/trial_pool.hpp"
#include "bestchoice/errors.hpp"
#include "bestchoice/random.hpp"
#include "bestchoice/simulate.hpp"
#include "bestchoice/strategy.hpp"

namespace bestchoice::negdep {
namespace {

using uint128 = unsigned __int128;

constexpr double kSlack = 1e-12;

void require_model(const BallsBinsModel& model) {
  if (model.bins < 1) throw std::invalid_argument("balls-bins: bins must be >= 1");
  if (model.balls < 0) throw std::invalid_argument("balls-bins: balls must be >= 0");
  // Partial counts in the placement DP reach (n+1)^m (binomial-weighted
  // prefixes), so that is what must fit in 128-bit integers.
  if (model.balls * std::log2(static_cast<double>(model.bins) + 1.0) > 120.0)
    throw size_error("balls-bins: counting range exceeds 128-bit integers");
}

// Pascal triangle up to row m, exact.
std::vector<std::vector<uint128>> binomial_table(int m) {
  std::vector<std::vector<uint128>> c(static_cast<std::size_t>(m) + 1);
  for (int i = 0; i <= m; ++i) {
    c[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(i) + 1, 1);
    for (int j = 1; j < i; ++j)
      c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] +
          c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
  }
  return c;
}

uint128 ipow(uint128 base, int exp) {
  uint128 r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

double to_double_ratio(uint128 num, uint128 den) {
  return static_cast<double>(static_cast<long double>(num) / static_cast<long double>(den));
}

// Ways to assign exactly `balls` labeled balls to `bins` bins with at most
// `cap` balls each. cap < 0 admits nothing (so a positive ball count yields
// zero and zero balls in zero bins yields one).
uint128 capped_assignments(int balls, int bins, int cap,
                           const std::vector<std::vector<uint128>>& binom) {
  std::vector<uint128> ways(static_cast<std::size_t>(balls) + 1, 0);
  ways[0] = 1;
  for (int b = 0; b < bins; ++b) {
    std::vector<uint128> next(static_cast<std::size_t>(balls) + 1, 0);
    for (int used = 0; used <= balls; ++used) {
      if (ways[static_cast<std::size_t>(used)] == 0) continue;
      const int room = std::min(cap, balls - used);
      for (int j = 0; j <= room; ++j)
        next[static_cast<std::size_t>(used + j)] +=
            ways[static_cast<std::size_t>(used)] *
            binom[static_cast<std::size_t>(balls - used)][static_cast<std::size_t>(j)];
    }
    ways = std::move(next);
  }
  return ways[static_cast<std::size_t>(balls)];
}

// Counts assignments with the `capped` bins limited to `cap` and the rest
// free. Free bins are just bins capped at the total ball count.
uint128 constrained_assignments(int balls, int capped, int cap, int free_bins,
                                const std::vector<std::vector<uint128>>& binom) {
  std::vector<uint128> ways(static_cast<std::size_t>(balls) + 1, 0);
  ways[0] = 1;
  for (int b = 0; b < capped; ++b) {
    std::vector<uint128> next(static_cast<std::size_t>(balls) + 1, 0);
    for (int used = 0; used <= balls; ++used) {
      if (ways[static_cast<std::size_t>(used)] == 0) continue;
      const int room = std::min(cap, balls - used);
      for (int j = 0; j <= room; ++j)
        next[static_cast<std::size_t>(used + j)] +=
            ways[static_cast<std::size_t>(used)] *
            binom[static_cast<std::size_t>(balls - used)][static_cast<std::size_t>(j)];
    }
    ways = std::move(next);
  }
  uint128 total = 0;
  for (int used = 0; used <= balls; ++used) {
    if (ways[static_cast<std::size_t>(used)] == 0) continue;
    total += ways[static_cast<std::size_t>(used)] *
             ipow(static_cast<uint128>(free_bins), balls - used);
  }
  return total;
}

// Pr[exactly s bins hold `t` balls each and the other n-s hold at most t-1],
// for s = 0..n. The boundary-layer coefficients of the augmented max CDF.
std::vector<double> exactly_at_probabilities(const BallsBinsModel& model, int t,
                                             const std::vector<std::vector<uint128>>& binom) {
  const int m = model.balls;
  const int n = model.bins;
  const uint128 denom = ipow(static_cast<uint128>(n), m);
  std::vector<double> q(static_cast<std::size_t>(n) + 1, 0.0);
  for (int s = 0; s <= n; ++s) {
    if (static_cast<long long>(s) * t > m) break;
    // choose balls for the s bins pinned at exactly t
    uint128 pinned = 1;
    int remaining = m;
    for (int j = 0; j < s; ++j) {
      pinned *= binom[static_cast<std::size_t>(remaining)][static_cast<std::size_t>(t)];
      remaining -= t;
    }
    const uint128 rest = capped_assignments(remaining, n - s, t - 1, binom);
    uint128 choose_bins = 1;
    for (int j = 1; j <= s; ++j) choose_bins = choose_bins * static_cast<uint128>(n - s + j) / j;
    q[static_cast<std::size_t>(s)] = to_double_ratio(choose_bins * pinned * rest, denom);
  }
  return q;
}

}  // namespace

double joint_max_probability(const BallsBinsModel& model, std::uint32_t mask, int cap) {
  require_model(model);
  if (model.bins > 31) throw size_error("joint_max_probability: subset masks support up to 31 bins");
  if (mask >= (1u << model.bins)) throw std::invalid_argument("joint_max_probability: mask out of range");
  if (cap < 0) throw std::invalid_argument("joint_max_probability: cap must be >= 0");
  const int constrained = std::popcount(mask);
  if (constrained == 0) return 1.0;
  const auto binom = binomial_table(model.balls);
  const uint128 count = constrained_assignments(model.balls, constrained, std::min(cap, model.balls),
                                                model.bins - constrained, binom);
  return to_double_ratio(count, ipow(static_cast<uint128>(model.bins), model.balls));
}

double enumerate_joint_max_probability(const BallsBinsModel& model, std::uint32_t mask, int cap) {
  require_model(model);
  const double outcomes = std::pow(static_cast<double>(model.bins), model.balls);
  if (outcomes > 1e7) throw size_error("enumerate_joint_max_probability: n^m exceeds 1e7");
  const int m = model.balls;
  const int n = model.bins;
  std::int64_t good = 0;
  std::int64_t total = 1;
  for (int i = 0; i < m; ++i) total *= n;
  for (std::int64_t code = 0; code < total; ++code) {
    std::int64_t c = code;
    std::vector<int> counts(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < m; ++i) {
      counts[static_cast<std::size_t>(c % n)]++;
      c /= n;
    }
    bool ok = true;
    for (int b = 0; b < n && ok; ++b)
      if ((mask >> b) & 1u) ok = counts[static_cast<std::size_t>(b)] <= cap;
    good += ok ? 1 : 0;
  }
  return static_cast<double>(good) / static_cast<double>(total);
}

SubsetLogTable build_subset_log_table(const BallsBinsModel& model, int cap) {
  require_model(model);
  if (model.bins > 20) throw size_error("build_subset_log_table: 2^n table capped at n <= 20");
  SubsetLogTable table;
  table.n = model.bins;
  table.cap = cap;
  table.g.resize(std::size_t{1} << model.bins);
  for (std::uint32_t mask = 0; mask < table.g.size(); ++mask) {
    const double p = joint_max_probability(model, mask, cap);
    if (p > 0.0)
      table.g[mask] = std::log(p);
    else
      table.g[mask] = std::nullopt;
  }
  return table;
}

SubmodularityReport check_submodular(const SubsetLogTable& table) {
  const std::uint32_t size = static_cast<std::uint32_t>(table.g.size());
  for (std::uint32_t a = 0; a < size; ++a) {
    for (std::uint32_t b = a; b < size; ++b) {
      const auto& gu = table.g[a | b];
      const auto& gi = table.g[a & b];
      // right side impossible: inequality vacuous
      if (!gu.has_value() || !gi.has_value()) continue;
      const auto& ga = table.g[a];
      const auto& gb = table.g[b];
      if (!ga.has_value() || !gb.has_value()) return {false, a, b};
      if (*ga + *gb < *gu + *gi - kSlack) return {false, a, b};
    }
  }
  return {};
}

bool check_hans(const SubsetLogTable& table, int r) {
  const int n = table.n;
  if (r < 1 || r > n) throw std::domain_error("check_hans: r out of range");
  const std::uint32_t full = static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1);
  if (table.impossible(full)) return true;  // left side is -inf

  double sum = 0.0;
  std::int64_t count = 0;
  for (std::uint32_t mask = 0; mask < table.g.size(); ++mask) {
    if (std::popcount(mask) != r) continue;
    if (table.impossible(mask)) return false;  // monotonicity would be broken anyway
    sum += *table.g[mask];
    ++count;
  }
  const double lhs = static_cast<double>(r) / n * *table.g[full];
  const double rhs = sum / static_cast<double>(count);
  return lhs <= rhs + kSlack;
}

std::pair<double, double> random_subset_bound(const BallsBinsModel& model, int cap, int r) {
  require_model(model);
  const int n = model.bins;
  if (r < 1 || r > n) throw std::domain_error("random_subset_bound: r out of range");
  if (n > 20) throw size_error("random_subset_bound: subset averaging capped at n <= 20");

  double sum = 0.0;
  std::int64_t count = 0;
  const std::uint32_t size = 1u << n;
  for (std::uint32_t mask = 0; mask < size; ++mask) {
    if (std::popcount(mask) != r) continue;
    sum += joint_max_probability(model, mask, cap);
    ++count;
  }
  const double full = joint_max_probability(model, size - 1, cap);
  const double rhs = full <= 0.0 ? 0.0 : std::pow(full, static_cast<double>(r) / n);
  return {sum / static_cast<double>(count), rhs};
}

double max_count_cdf(const BallsBinsModel& model, int t) {
  require_model(model);
  if (t < 0) return 0.0;
  if (model.bins > 31) {
    // full-set constraint does not need a mask
    const auto binom = binomial_table(model.balls);
    const uint128 count =
        capped_assignments(model.balls, model.bins, std::min(t, model.balls), binom);
    return to_double_ratio(count, ipow(static_cast<uint128>(model.bins), model.balls));
  }
  return joint_max_probability(model, static_cast<std::uint32_t>((std::uint64_t{1} << model.bins) - 1),
                               t);
}

AugmentedValue count_threshold(const BallsBinsModel& model, double p) {
  require_model(model);
  if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("count_threshold: p must lie in [0, 1]");
  const int m = model.balls;
  if (p == 0.0) {
    int t = 0;
    while (max_count_cdf(model, t) <= 0.0) ++t;
    return {static_cast<double>(t), 0.0};
  }

  int t = 0;
  while (t < m && max_count_cdf(model, t) < p) ++t;

  const auto binom = binomial_table(m);
  const std::vector<double> q = exactly_at_probabilities(model, t, binom);
  const auto layer_cdf = [&](double u) {
    double acc = 0.0;
    double upow = 1.0;
    for (double qs : q) {
      acc += qs * upow;
      upow *= u;
    }
    return acc;
  };

  if (layer_cdf(0.0) >= p) return {static_cast<double>(t), 0.0};
  double lo = 0.0, hi = 1.0;
  for (;;) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (layer_cdf(mid) >= p)
      hi = mid;
    else
      lo = mid;
  }
  return {static_cast<double>(t), hi};
}

SimulationResult simulate_balls_bins_secretary(const BallsBinsModel& model, std::int64_t trials,
                                               std::uint64_t seed, int workers) {
  require_model(model);
  if (trials < 1) throw std::invalid_argument("simulate_balls_bins_secretary: trials must be >= 1");
  const int n = model.bins;
  const DecisionNumbers d = optimal_decision_numbers(n);

  std::vector<AugmentedValue> thresholds;
  thresholds.reserve(static_cast<std::size_t>(n));
  for (double di : d.values)
    thresholds.push_back(count_threshold(model, decision_power(di, n)));

  const auto trial_win = [&](std::int64_t trial) -> int {
    RandomStream trial_stream(seed, static_cast<std::uint64_t>(trial));
    RandomStream draw_rs = trial_stream.substream(0);
    RandomStream perm_rs = trial_stream.substream(1);
    RandomStream tie_rs = trial_stream.substream(2);

    std::vector<int> counts(static_cast<std::size_t>(n), 0);
    for (int b = 0; b < model.balls; ++b)
      counts[static_cast<std::size_t>(draw_rs.next_below(static_cast<std::uint64_t>(n)))]++;
    const std::vector<std::size_t> order = random_permutation(static_cast<std::size_t>(n), perm_rs);
    std::vector<double> ties(static_cast<std::size_t>(n));
    for (int b = 0; b < n; ++b) ties[static_cast<std::size_t>(b)] = tie_rs.next_uniform01();

    std::vector<AugmentedValue> presented(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
      const std::size_t bin = order[static_cast<std::size_t>(j)];
      presented[static_cast<std::size_t>(j)] =
          AugmentedValue{static_cast<double>(counts[bin]), ties[bin]};
    }
    return run_episode<AugmentedValue>(presented, thresholds).win ? 1 : 0;
  };

  const std::int64_t wins = detail::count_over_trials(trials, workers, trial_win);
  return summarize_bernoulli(wins, trials, gamma_limit(solve_c()));
}

}  // namespace bestchoice::negdep
