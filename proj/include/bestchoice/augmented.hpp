// Copyright (c) 2026 the bestchoice authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>

namespace bestchoice {

// A value paired with an independent uniform tiebreak, ordered
// lexicographically. Wrapping every draw of a distribution with atoms in
// one of these makes the joint law behave like a continuous one: ties
// between distinct draws then happen with probability zero, so "the
// largest draw" is almost surely unique and strict threshold comparisons
// are unambiguous.
struct AugmentedValue {
  double primary = 0.0;
  double tiebreak = 0.0;  // in [0, 1]

  friend constexpr auto operator<=>(const AugmentedValue&, const AugmentedValue&) = default;
};

}  // namespace bestchoice
