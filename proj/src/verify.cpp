// Copyright (c) 2026 the bestchoice authors
// SPDX-License-Identifier: Apache-2.0
#include "bestchoice/verify.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>
#include <vector>

#include "bestchoice/negdep.hpp"
#include "bestchoice/random.hpp"
#include "bestchoice/samples.hpp"
#include "bestchoice/simulate.hpp"

namespace bestchoice::verify {
namespace {

constexpr double kSlack = 1e-12;

std::string describe_vector(const std::vector<double>& a) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < a.size(); ++i) os << (i ? ", " : "") << a[i];
  os << ")";
  return os.str();
}

}  // namespace

Report subset_bound_suite(std::uint64_t seed) {
  RandomStream rng(seed, 0);
  int checked = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng.next_below(9));  // 2..10
    std::vector<double> a(static_cast<std::size_t>(n));
    for (double& ak : a) ak = rng.next_uniform01();

    for (int r = 1; r <= n; ++r) {
      const auto [avg, bound] = subset_product_bound(a, r);
      if (avg < bound - kSlack) {
        std::ostringstream os;
        os << "subset average " << avg << " below power bound " << bound << " at r=" << r
           << ", a=" << describe_vector(a);
        return {false, os.str()};
      }
      ++checked;
    }
  }
  // equality case: constant vectors
  for (double v : {0.0, 0.25, 0.7, 1.0}) {
    std::vector<double> a(5, v);
    for (int r = 1; r <= 5; ++r) {
      const auto [avg, bound] = subset_product_bound(a, r);
      if (std::abs(avg - bound) > kSlack) {
        std::ostringstream os;
        os << "constant vector a_k=" << v << " should give equality at r=" << r << ", got " << avg
           << " vs " << bound;
        return {false, os.str()};
      }
      ++checked;
    }
  }
  std::ostringstream os;
  os << checked << " subset-average inequalities verified";
  return {true, os.str()};
}

Report negdep_suite() {
  int checked = 0;
  for (int n = 1; n <= 4; ++n) {
    for (int m = 0; m <= 6; ++m) {
      const negdep::BallsBinsModel model{m, n};
      for (int cap = 0; cap <= m; ++cap) {
        // DP vs brute-force enumeration on every subset
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
          const double dp = negdep::joint_max_probability(model, mask, cap);
          const double brute = negdep::enumerate_joint_max_probability(model, mask, cap);
          if (std::abs(dp - brute) > kSlack) {
            std::ostringstream os;
            os << "DP/enumeration mismatch: m=" << m << " n=" << n << " T=" << cap
               << " mask=" << mask << " dp=" << dp << " brute=" << brute;
            return {false, os.str()};
          }
          ++checked;
        }

        const negdep::SubsetLogTable table = negdep::build_subset_log_table(model, cap);

        // symmetry: g depends only on |A|
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
          const std::uint32_t rep = (1u << std::popcount(mask)) - 1;
          const bool both_impossible = table.impossible(mask) && table.impossible(rep);
          if (!both_impossible &&
              (table.impossible(mask) != table.impossible(rep) ||
               std::abs(*table.g[mask] - *table.g[rep]) > kSlack)) {
            std::ostringstream os;
            os << "exchangeability broken: m=" << m << " n=" << n << " T=" << cap
               << " mask=" << mask;
            return {false, os.str()};
          }
        }

        const auto sub = negdep::check_submodular(table);
        if (!sub.ok) {
          std::ostringstream os;
          os << "submodularity violated: m=" << m << " n=" << n << " T=" << cap << " A=" << sub.a
             << " B=" << sub.b;
          return {false, os.str()};
        }
        ++checked;

        for (int r = 1; r <= n; ++r) {
          if (!negdep::check_hans(table, r)) {
            std::ostringstream os;
            os << "size-r averaging inequality violated: m=" << m << " n=" << n << " T=" << cap
               << " r=" << r;
            return {false, os.str()};
          }
          const auto [lhs, rhs] = negdep::random_subset_bound(model, cap, r);
          if (lhs < rhs - kSlack) {
            std::ostringstream os;
            os << "subset-average bound violated: m=" << m << " n=" << n << " T=" << cap
               << " r=" << r << " lhs=" << lhs << " rhs=" << rhs;
            return {false, os.str()};
          }
          checked += 2;
        }
      }
    }
  }
  std::ostringstream os;
  os << checked << " exact checks passed (m <= 6, n <= 4, all T, all r)";
  return {true, os.str()};
}

Report samples_suite(std::uint64_t seed) {
  const samples::EstimationParams params{0.1, 0.1, 0.05};
  const std::int64_t m = samples::required_sample_size(params);
  const int repetitions = 200;

  // log-spaced targets spanning (delta, 1]
  std::vector<double> targets;
  for (int i = 0; i <= 40; ++i)
    targets.push_back(std::exp(std::log(params.delta * 1.02) * (40 - i) / 40.0));
  targets.back() = 1.0;

  const double upper = 1.0 + params.epsilon;
  const double lower = 1.0 / ((1.0 + params.epsilon) * (1.0 + params.epsilon));

  int hits = 0;
  for (int rep = 0; rep < repetitions; ++rep) {
    RandomStream rng(seed, static_cast<std::uint64_t>(rep));
    samples::SampleSet set;
    set.sorted.resize(static_cast<std::size_t>(m));
    for (double& s : set.sorted) s = rng.next_uniform01();
    std::sort(set.sorted.begin(), set.sorted.end());

    const std::vector<double> t = samples::empirical_thresholds(set, targets, params);
    bool all_ok = true;
    for (std::size_t i = 0; i < targets.size(); ++i) {
      const double attained = t[i];  // F(T) = T for Uniform(0,1)
      if (attained < targets[i] * lower - 1e-15 || attained > targets[i] * upper + 1e-15) {
        all_ok = false;
        break;
      }
    }
    hits += all_ok ? 1 : 0;
  }

  std::ostringstream os;
  os << "sandwich hit-rate " << hits << "/" << repetitions << " at m=" << m;
  if (hits * 10 < repetitions * 9) {
    os << " (below the 90% requirement)";
    return {false, os.str()};
  }
  return {true, os.str()};
}

}  // namespace bestchoice::verify
