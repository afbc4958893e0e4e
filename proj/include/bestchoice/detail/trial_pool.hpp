// Copyright (c) 2026 the bestchoice authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace bestchoice::detail {

inline int normalize_workers(int workers) {
  if (workers >= 1) return workers;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Sums fn(t) over t in [0, trials), split into contiguous chunks across
// workers. fn must only depend on t (trials key their own random streams),
// so the result is identical for every worker count.
template <typename TrialFn>
std::int64_t count_over_trials(std::int64_t trials, int workers, TrialFn&& fn) {
  workers = static_cast<int>(std::min<std::int64_t>(normalize_workers(workers), trials));
  if (workers <= 1) {
    std::int64_t total = 0;
    for (std::int64_t t = 0; t < trials; ++t) total += fn(t);
    return total;
  }
  std::vector<std::int64_t> partial(static_cast<std::size_t>(workers), 0);
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
  std::vector<std::thread> pool;
  const std::int64_t chunk = (trials + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        const std::int64_t begin = w * chunk;
        const std::int64_t end = std::min(trials, begin + chunk);
        std::int64_t local = 0;
        for (std::int64_t t = begin; t < end; ++t) local += fn(t);
        partial[static_cast<std::size_t>(w)] = local;
      } catch (...) {
        errors[static_cast<std::size_t>(w)] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::int64_t total = 0;
  for (std::int64_t p : partial) total += p;
  return total;
}

}  // namespace bestchoice::detail
