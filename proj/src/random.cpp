// Copyright (c) 2026 the bestchoice authors
// SPDX-License-Identifier: Apache-2.0
#include "bestchoice/random.hpp"

#include <stdexcept>

namespace bestchoice {
namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

// SplitMix64 output function (Steele, Lea, Flood 2014).
std::uint64_t finalize(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t mix(std::uint64_t z) { return finalize(z + kGolden); }

}  // namespace

RandomStream::RandomStream(std::uint64_t seed, std::uint64_t index)
    : key_(mix(mix(seed ^ 0x8c6bd53f155e6f25ULL) ^ mix(index))), state_(key_) {}

RandomStream::RandomStream(from_key_tag, std::uint64_t key) : key_(key), state_(key) {}

std::uint64_t RandomStream::next_u64() {
  state_ += kGolden;
  return finalize(state_);
}

double RandomStream::next_uniform01() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::uint64_t RandomStream::next_below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("next_below: bound must be positive");
  // rejection sampling; threshold = 2^64 mod bound
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = next_u64();
    if (r >= threshold) return r % bound;
  }
}

RandomStream RandomStream::substream(std::uint64_t role) const {
  return RandomStream(from_key_tag{}, mix(key_ ^ mix(role ^ 0xd1b54a32d192ed03ULL)));
}

}  // namespace bestchoice
