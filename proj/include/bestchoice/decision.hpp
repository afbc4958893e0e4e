// Copyright (c) 2026 the bestchoice authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

namespace bestchoice {

// Decision numbers d_1 >= d_2 >= ... >= d_n in [0, 1]. Position i of the
// online policy accepts a running maximum exactly when it clears the
// threshold defined by Pr[max of all draws <= tau_i] = d_i^n.
struct DecisionNumbers {
  std::vector<double> values;

  int horizon() const { return static_cast<int>(values.size()); }
};

// Success probability of the threshold policy with decision numbers d:
//
//   (1 - d_1^n)/n
//     + sum_{r=1}^{n-1} [ sum_{i=1}^{r} (d_i^r/r - d_i^n/n)/(n-r)  -  d_{r+1}^n/n ]
//
// Exact for n IID continuous draws; a lower bound on the win rate for
// independent non-identical draws. Throws std::domain_error when d is not
// monotone nonincreasing or leaves [0, 1].
double success_probability(const DecisionNumbers& d);

// Maximizer of success_probability for the given horizon: d_n = 0, the
// remaining coordinates found by cyclic coordinate ascent with exact line
// maximization (each coordinate's stationarity condition is univariate),
// swept until the numbers stop moving. Results are cached per horizon; safe
// for concurrent callers.
DecisionNumbers optimal_decision_numbers(int n);

// The two constants of the limiting problem: c solves the defining series
// equation, gamma is the optimal limiting success probability.
struct LimitConstants {
  double c = 0.0;
  double gamma = 0.0;
};

// The constant c solving sum_{k>=1} c^k / (k * k!) = 1, i.e. the termwise
// integral of (e^x - 1)/x from 0 to c. Roughly 0.8044.
double solve_c();

// Both constants at once: {solve_c(), gamma_limit(solve_c())}.
LimitConstants limit_constants();

// Limiting success probability (e^c - c - 1) E1(c) + e^{-c}; at c = solve_c()
// this is the optimal limit, roughly 0.5801. Throws std::domain_error for
// c <= 0.
double gamma_limit(double c);

// Exponential integral E1(x) = int_x^inf e^-t / t dt for x > 0; power series
// below 1, continued fraction above.
double exponential_integral_e1(double x);

// d^k guarding against pow underflow surprises for very small bases.
double decision_power(double d, int k);

}  // namespace bestchoice
