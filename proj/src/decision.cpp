// Copyright (c) 2026 the bestchoice authors
// SPDX-License-Identifier: Apache-2.0
#include "bestchoice/decision.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace bestchoice {
namespace {

constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

void validate(const DecisionNumbers& d) {
  if (d.values.empty()) throw std::domain_error("decision numbers: empty");
  double prev = 1.0 + 1e-12;
  for (double v : d.values) {
    if (!(v >= 0.0 && v <= 1.0)) throw std::domain_error("decision numbers: values must lie in [0, 1]");
    if (v > prev + 1e-12) throw std::domain_error("decision numbers: must be nonincreasing");
    prev = v;
  }
}

// sum_{k>=1} c^k / (k * k!), the integral of (e^x - 1)/x summed termwise.
double c_series(double c) {
  double term = c;  // c^k / k!
  double sum = 0.0;
  for (int k = 1; k < 200; ++k) {
    sum += term / k;
    term *= c / (k + 1);
    if (term < 1e-18 * (sum + 1.0)) break;
  }
  return sum;
}

// E1 by alternating series: -gamma - ln x + sum (-1)^{k+1} x^k / (k * k!).
double e1_series(double x) {
  double term = x;
  double sum = 0.0;
  for (int k = 1; k < 80; ++k) {
    sum += term / k;
    term *= -x / (k + 1);
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return -kEulerGamma - std::log(x) + sum;
}

// E1 by the standard continued fraction, evaluated with the modified Lentz
// scheme:  E1(x) = e^{-x} / (x + 1 - 1/(x + 3 - 4/(x + 5 - 9/(...)))).
double e1_continued_fraction(double x) {
  constexpr double tiny = 1e-300;
  double b = x + 1.0;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 200; ++i) {
    const double a = -static_cast<double>(i) * i;
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    const double del = c * d;
    h *= del;
    if (std::abs(del - 1.0) < 1e-15) break;
  }
  return h * std::exp(-x);
}

// The success formula, O(n^2) with incrementally maintained powers.
double evaluate_formula(const std::vector<double>& d) {
  const int n = static_cast<int>(d.size());
  std::vector<double> pw(d.begin(), d.end());  // d_i^r, starting at r = 1
  std::vector<double> pw_n(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) pw_n[i] = decision_power(d[i], n);

  double total = (1.0 - pw_n[0]) / n;
  for (int r = 1; r <= n - 1; ++r) {
    double inner = 0.0;
    for (int i = 0; i < r; ++i)
      inner += pw[static_cast<std::size_t>(i)] / r - pw_n[static_cast<std::size_t>(i)] / n;
    total += inner / (n - r) - pw_n[static_cast<std::size_t>(r)] / n;
    for (std::size_t i = 0; i < d.size(); ++i) pw[i] *= d[i];
  }
  return total;
}

// Derivative of the success formula in the single coordinate at 1-based
// position `pos` is
//
//   t^{pos-1} * [ sum_{r=pos}^{n-1} (t^{r-pos} - t^{n-pos}) / (n - r)  -  t^{n-pos} ]
//
// The cross terms cancel, so each coordinate's stationarity condition is a
// univariate polynomial equation that involves neither the other
// coordinates nor (in suffix indexing) the horizon; this is why the optimal
// value at a fixed distance from the end is horizon-independent. Returns
// the bracketed factor, which is positive at 0 and -1 at 1.
double reduced_derivative(int pos, int n, double t) {
  const double t_top = decision_power(t, n - pos);
  double s = -t_top;
  for (int r = pos; r <= n - 1; ++r) s += (decision_power(t, r - pos) - t_top) / (n - r);
  return s;
}

// Exact line maximization over [lo, hi]: bisect on the sign of the reduced
// derivative around its unique interior root.
double maximize_coordinate(int pos, int n, double lo, double hi) {
  if (reduced_derivative(pos, n, hi) >= 0.0) return hi;
  if (reduced_derivative(pos, n, lo) <= 0.0) return lo;
  for (;;) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) return lo;
    if (reduced_derivative(pos, n, mid) > 0.0)
      lo = mid;
    else
      hi = mid;
  }
}

std::vector<double> compute_optimal(int n) {
  if (n == 1) return {0.0};
  const double c = solve_c();
  std::vector<double> d(static_cast<std::size_t>(n));
  for (int i = 0; i < n - 1; ++i) {
    const double asym = 1.0 - c / (n - 1 - i);  // 1 - c/i in positions from the end
    d[static_cast<std::size_t>(i)] = std::clamp(asym, 0.0, 1.0);
  }
  d[static_cast<std::size_t>(n - 1)] = 0.0;  // last draw: accept any running maximum

  // Cyclic coordinate ascent; each pass maximizes one coordinate exactly
  // inside the monotonicity box, so the sweep settles immediately once the
  // brackets stop moving.
  for (int sweep = 0; sweep < 200; ++sweep) {
    double max_change = 0.0;
    for (int i = 0; i < n - 1; ++i) {
      const double lo = d[static_cast<std::size_t>(i + 1)];
      const double hi = i == 0 ? 1.0 : d[static_cast<std::size_t>(i - 1)];
      const double old = d[static_cast<std::size_t>(i)];
      const double best = maximize_coordinate(i + 1, n, lo, hi);
      d[static_cast<std::size_t>(i)] = best;
      max_change = std::max(max_change, std::abs(best - old));
    }
    if (max_change < 1e-10) break;
  }
  return d;
}

}  // namespace

double decision_power(double d, int k) {
  if (k == 0) return 1.0;
  if (d <= 0.0) return 0.0;
  if (d < 1e-12) return std::exp(k * std::log(d));
  return std::pow(d, k);
}

double success_probability(const DecisionNumbers& d) {
  validate(d);
  return evaluate_formula(d.values);
}

DecisionNumbers optimal_decision_numbers(int n) {
  if (n < 1) throw std::domain_error("optimal_decision_numbers: n must be >= 1");
  static std::mutex mu;
  static std::map<int, std::vector<double>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return {it->second};
  }
  std::vector<double> d = compute_optimal(n);
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(n, d);
  return {std::move(d)};
}

double solve_c() {
  static const double c = [] {
    double lo = 0.5, hi = 1.0;  // series(0.5) < 1 < series(1)
    for (;;) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      if (c_series(mid) >= 1.0)
        hi = mid;
      else
        lo = mid;
    }
    return hi;
  }();
  return c;
}

LimitConstants limit_constants() {
  const double c = solve_c();
  return {c, gamma_limit(c)};
}

double exponential_integral_e1(double x) {
  if (!(x > 0.0)) throw std::domain_error("E1: argument must be positive");
  return x <= 1.0 ? e1_series(x) : e1_continued_fraction(x);
}

double gamma_limit(double c) {
  if (!(c > 0.0)) throw std::domain_error("gamma_limit: c must be positive");
  return (std::exp(c) - c - 1.0) * exponential_integral_e1(c) + std::exp(-c);
}

}  // namespace bestchoice
