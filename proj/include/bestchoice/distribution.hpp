// Copyright (c) 2026 the bestchoice authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <string>
#include <variant>
#include <vector>

#include "bestchoice/augmented.hpp"
#include "bestchoice/random.hpp"

namespace bestchoice {

// One-dimensional law with CDF, generalized-inverse quantile and an
// inverse-transform sampler. Four families cover the artifact: two
// continuous (uniform, exponential) and two with atoms (finite discrete,
// empirical over a fixed sample set).
//
// Quantiles follow the generalized-inverse convention
//   quantile(p) = inf { x : cdf(x) >= p },
// with quantile(0) defined as the infimum of the support. This is what
// makes the Galois inequalities cdf(quantile(p)) >= p and
// quantile(cdf(x)) <= x testable for every family, including step CDFs.
class Distribution {
 public:
  struct Uniform {
    double lo, hi;
  };
  struct Exponential {
    double rate;
  };
  struct Discrete {
    std::vector<double> values;  // strictly increasing
    std::vector<double> probs;   // nonnegative, sums to 1
    std::vector<double> cum;     // prefix sums of probs
  };
  struct Empirical {
    std::vector<double> samples;  // sorted nondecreasing, nonempty
  };

  static Distribution uniform(double lo, double hi);
  static Distribution exponential(double rate);
  static Distribution discrete(std::vector<double> values, std::vector<double> probs);
  static Distribution empirical(std::vector<double> samples);

  // Pr[X <= x]; total on the reals.
  double cdf(double x) const;

  // Pr[X < x]; equals cdf(x) for the continuous families.
  double cdf_left(double x) const;

  // Pr[X = x]; zero for the continuous families.
  double pmf_at(double x) const;

  // Generalized inverse; throws std::domain_error outside [0, 1].
  double quantile(double p) const;

  // Inverse-transform draw. One uniform consumed per call.
  double sample(RandomStream& rng) const;

  // True when the law carries point masses (Discrete, Empirical).
  bool has_atoms() const;

  double support_inf() const { return quantile(0.0); }

  // Atom locations in the half-open interval (lo, hi], ascending.
  std::vector<double> atoms_in(double lo, double hi) const;

  std::string kind_name() const;

  template <typename Visitor>
  decltype(auto) visit(Visitor&& v) const {
    return std::visit(std::forward<Visitor>(v), impl_);
  }

 private:
  using Impl = std::variant<Uniform, Exponential, Discrete, Empirical>;
  explicit Distribution(Impl impl) : impl_(std::move(impl)) {}
  Impl impl_;
};

// Pr[max of one independent draw from each law <= x] = prod_k cdf_k(x).
double product_max_cdf(std::span<const Distribution> dists, double x);

// Generalized inverse of product_max_cdf: inf { x : prod_k cdf_k(x) >= p },
// located by doubling from a support-based bracket and bisecting until the
// bracket collapses (well below the 1e-12 contract). Throws
// std::domain_error outside [0, 1].
double product_max_quantile(std::span<const Distribution> dists, double p);

// CDF of the lexicographic maximum of augmented draws (X_k, U_k):
//   prod_k ( Pr[X_k < t] + Pr[X_k = t] * u )   at the point (t, u).
double augmented_product_max_cdf(std::span<const Distribution> dists, const AugmentedValue& a);

// Exact augmented quantile: the smallest (t, u) in lexicographic order with
// augmented_product_max_cdf >= p. The primary coordinate snaps onto atom
// locations so discrete thresholds compare exactly against discrete draws.
AugmentedValue augmented_product_max_quantile(std::span<const Distribution> dists, double p);

}  // namespace bestchoice
