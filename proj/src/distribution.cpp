// Copyright (c) 2026 the bestchoice authors
// SPDX-License-Identifier: Apache-2.0
#include "bestchoice/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace bestchoice {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("quantile: p must lie in [0, 1]");
}

// First index k in [1, cum.size()] with cum[k-1] >= p, comparing against the
// same stored doubles the CDF reports, so quantile(cdf(x)) <= x holds exactly.
std::size_t first_rank_at_least(const std::vector<double>& cum, double p) {
  std::size_t lo = 0, hi = cum.size() - 1;
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (cum[mid] >= p)
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo;
}

}  // namespace

Distribution Distribution::uniform(double lo, double hi) {
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi))
    throw std::invalid_argument("uniform: requires finite lo < hi");
  return Distribution(Uniform{lo, hi});
}

Distribution Distribution::exponential(double rate) {
  if (!(rate > 0.0) || !std::isfinite(rate))
    throw std::invalid_argument("exponential: rate must be positive");
  return Distribution(Exponential{rate});
}

Distribution Distribution::discrete(std::vector<double> values, std::vector<double> probs) {
  if (values.empty() || values.size() != probs.size())
    throw std::invalid_argument("discrete: values/probs must be nonempty and equal length");
  double sum = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) throw std::invalid_argument("discrete: values must be finite");
    if (i > 0 && !(values[i - 1] < values[i]))
      throw std::invalid_argument("discrete: values must be strictly increasing");
    if (!(probs[i] >= 0.0)) throw std::invalid_argument("discrete: probabilities must be nonnegative");
    sum += probs[i];
  }
  if (std::abs(sum - 1.0) > 1e-12) throw std::invalid_argument("discrete: probabilities must sum to 1");
  std::vector<double> cum(probs.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    acc += probs[i];
    cum[i] = acc;
  }
  cum.back() = 1.0;
  return Distribution(Discrete{std::move(values), std::move(probs), std::move(cum)});
}

Distribution Distribution::empirical(std::vector<double> samples) {
  if (samples.empty()) throw std::invalid_argument("empirical: needs at least one sample");
  for (double s : samples)
    if (!std::isfinite(s)) throw std::invalid_argument("empirical: samples must be finite");
  std::sort(samples.begin(), samples.end());
  return Distribution(Empirical{std::move(samples)});
}

double Distribution::cdf(double x) const {
  return visit([x](const auto& d) -> double {
    using T = std::decay_t<decltype(d)>;
    if constexpr (std::is_same_v<T, Uniform>) {
      if (x <= d.lo) return 0.0;
      if (x >= d.hi) return 1.0;
      return (x - d.lo) / (d.hi - d.lo);
    } else if constexpr (std::is_same_v<T, Exponential>) {
      if (x <= 0.0) return 0.0;
      return -std::expm1(-d.rate * x);
    } else if constexpr (std::is_same_v<T, Discrete>) {
      const auto it = std::upper_bound(d.values.begin(), d.values.end(), x);
      if (it == d.values.begin()) return 0.0;
      return d.cum[static_cast<std::size_t>(it - d.values.begin()) - 1];
    } else {
      const auto it = std::upper_bound(d.samples.begin(), d.samples.end(), x);
      return static_cast<double>(it - d.samples.begin()) / static_cast<double>(d.samples.size());
    }
  });
}

double Distribution::cdf_left(double x) const {
  return visit([this, x](const auto& d) -> double {
    using T = std::decay_t<decltype(d)>;
    if constexpr (std::is_same_v<T, Discrete>) {
      const auto it = std::lower_bound(d.values.begin(), d.values.end(), x);
      if (it == d.values.begin()) return 0.0;
      return d.cum[static_cast<std::size_t>(it - d.values.begin()) - 1];
    } else if constexpr (std::is_same_v<T, Empirical>) {
      const auto it = std::lower_bound(d.samples.begin(), d.samples.end(), x);
      return static_cast<double>(it - d.samples.begin()) / static_cast<double>(d.samples.size());
    } else {
      return cdf(x);
    }
  });
}

double Distribution::pmf_at(double x) const {
  return visit([x](const auto& d) -> double {
    using T = std::decay_t<decltype(d)>;
    if constexpr (std::is_same_v<T, Discrete>) {
      const auto it = std::lower_bound(d.values.begin(), d.values.end(), x);
      if (it != d.values.end() && *it == x)
        return d.probs[static_cast<std::size_t>(it - d.values.begin())];
      return 0.0;
    } else if constexpr (std::is_same_v<T, Empirical>) {
      const auto range = std::equal_range(d.samples.begin(), d.samples.end(), x);
      return static_cast<double>(range.second - range.first) /
             static_cast<double>(d.samples.size());
    } else {
      return 0.0;
    }
  });
}

double Distribution::quantile(double p) const {
  require_probability(p);
  return visit([p](const auto& d) -> double {
    using T = std::decay_t<decltype(d)>;
    if constexpr (std::is_same_v<T, Uniform>) {
      return d.lo + p * (d.hi - d.lo);
    } else if constexpr (std::is_same_v<T, Exponential>) {
      if (p >= 1.0) return kInf;
      return -std::log1p(-p) / d.rate;
    } else if constexpr (std::is_same_v<T, Discrete>) {
      if (p == 0.0) return d.values.front();
      return d.values[first_rank_at_least(d.cum, p)];
    } else {
      if (p == 0.0) return d.samples.front();
      const std::size_t m = d.samples.size();
      // smallest rank k with k/m >= p, using the same division the CDF uses
      std::size_t lo = 1, hi = m;
      while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        if (static_cast<double>(mid) / static_cast<double>(m) >= p)
          hi = mid;
        else
          lo = mid + 1;
      }
      return d.samples[lo - 1];
    }
  });
}

double Distribution::sample(RandomStream& rng) const {
  return quantile(rng.next_uniform01());
}

bool Distribution::has_atoms() const {
  return visit([](const auto& d) {
    using T = std::decay_t<decltype(d)>;
    return std::is_same_v<T, Discrete> || std::is_same_v<T, Empirical>;
  });
}

std::vector<double> Distribution::atoms_in(double lo, double hi) const {
  return visit([lo, hi](const auto& d) -> std::vector<double> {
    using T = std::decay_t<decltype(d)>;
    std::vector<double> out;
    if constexpr (std::is_same_v<T, Discrete>) {
      for (double v : d.values)
        if (v > lo && v <= hi) out.push_back(v);
    } else if constexpr (std::is_same_v<T, Empirical>) {
      auto it = std::upper_bound(d.samples.begin(), d.samples.end(), lo);
      for (; it != d.samples.end() && *it <= hi; ++it)
        if (out.empty() || out.back() != *it) out.push_back(*it);
    }
    return out;
  });
}

std::string Distribution::kind_name() const {
  return visit([](const auto& d) -> std::string {
    using T = std::decay_t<decltype(d)>;
    if constexpr (std::is_same_v<T, Uniform>) return "uniform";
    if constexpr (std::is_same_v<T, Exponential>) return "exponential";
    if constexpr (std::is_same_v<T, Discrete>) return "discrete";
    return "empirical";
  });
}

double product_max_cdf(std::span<const Distribution> dists, double x) {
  if (dists.empty()) throw std::invalid_argument("product_max_cdf: empty distribution list");
  double p = 1.0;
  for (const auto& d : dists) p *= d.cdf(x);
  return p;
}

namespace {

double joint_support_inf(std::span<const Distribution> dists) {
  double lo = -kInf;
  for (const auto& d : dists) lo = std::max(lo, d.support_inf());
  return lo;
}

// Bracket [a, b] with H(a) < p <= H(b), then bisect until the bracket stops
// shrinking in floating point. Returns the bracket (a, b).
std::pair<double, double> locate_crossing(std::span<const Distribution> dists, double p) {
  double a = joint_support_inf(dists);
  if (product_max_cdf(dists, a) >= p) return {a, a};
  double step = 1.0;
  double b = a + step;
  while (product_max_cdf(dists, b) < p) {
    a = b;
    step *= 2.0;
    if (step > 1e300) return {a, kInf};  // p = 1 with unbounded support
    b = a + step;
  }
  for (;;) {
    const double mid = 0.5 * (a + b);
    if (mid <= a || mid >= b) break;
    if (product_max_cdf(dists, mid) >= p)
      b = mid;
    else
      a = mid;
  }
  return {a, b};
}

}  // namespace

double product_max_quantile(std::span<const Distribution> dists, double p) {
  if (dists.empty()) throw std::invalid_argument("product_max_quantile: empty distribution list");
  require_probability(p);
  if (p == 0.0) return joint_support_inf(dists);
  return locate_crossing(dists, p).second;
}

double augmented_product_max_cdf(std::span<const Distribution> dists, const AugmentedValue& a) {
  if (dists.empty()) throw std::invalid_argument("augmented_product_max_cdf: empty list");
  double p = 1.0;
  for (const auto& d : dists) p *= d.cdf_left(a.primary) + d.pmf_at(a.primary) * a.tiebreak;
  return p;
}

AugmentedValue augmented_product_max_quantile(std::span<const Distribution> dists, double p) {
  if (dists.empty()) throw std::invalid_argument("augmented_product_max_quantile: empty list");
  require_probability(p);
  if (p == 0.0) return {joint_support_inf(dists), 0.0};

  auto [a, b] = locate_crossing(dists, p);
  double t = b;
  if (a < b) {
    // If the CDF crosses p by jumping, land exactly on the atom so that
    // lexicographic comparisons against atom-valued draws are exact.
    std::vector<double> candidates;
    for (const auto& d : dists)
      for (double v : d.atoms_in(a, b)) candidates.push_back(v);
    std::sort(candidates.begin(), candidates.end());
    for (double v : candidates) {
      if (product_max_cdf(dists, v) >= p) {
        t = v;
        break;
      }
    }
  }

  // Solve prod_k (cdf_left + pmf * u) = p for the tiebreak coordinate.
  if (augmented_product_max_cdf(dists, {t, 0.0}) >= p) return {t, 0.0};
  double ulo = 0.0, uhi = 1.0;
  for (;;) {
    const double mid = 0.5 * (ulo + uhi);
    if (mid <= ulo || mid >= uhi) break;
    if (augmented_product_max_cdf(dists, {t, mid}) >= p)
      uhi = mid;
    else
      ulo = mid;
  }
  return {t, uhi};
}

}  // namespace bestchoice
