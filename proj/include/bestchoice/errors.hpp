// Copyright (c) 2026 the bestchoice authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bestchoice {

// Thrown when an exact computation would exceed its enumeration or
// overflow guard (e.g. subset tables for n > 20, ball counts past the
// 128-bit integer range).
class size_error : public std::runtime_error {
 public:
  explicit size_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown by the sample-based estimators when the provided sample set is
// too small for the deepest quantile bucket that has to be resolved.
// Carries the smallest sample count that would have sufficed.
class insufficient_samples_error : public std::runtime_error {
 public:
  insufficient_samples_error(const std::string& what, std::int64_t required)
      : std::runtime_error(what), required_samples(required) {}

  std::int64_t required_samples;
};

}  // namespace bestchoice
