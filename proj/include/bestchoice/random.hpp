// Copyright (c) 2026 the bestchoice authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

namespace bestchoice {

// Counter-style pseudo-random stream built on the SplitMix64 mixer.
//
// A stream is identified by a (master seed, stream index) pair; two streams
// with the same identity produce the same output, streams with different
// identities are statistically independent. Substreams are derived from the
// stream identity, not from its consumption state, so the order in which a
// family of streams is consumed never changes what any of them produces.
// This is what makes Monte Carlo runs reproducible under parallelism: every
// trial owns stream index = trial index and nothing is shared.
class RandomStream {
 public:
  RandomStream(std::uint64_t seed, std::uint64_t index);

  // Next raw 64-bit word.
  std::uint64_t next_u64();

  // Uniform double in [0, 1), 53 random bits.
  double next_uniform01();

  // Unbiased uniform integer in [0, bound); bound >= 1.
  std::uint64_t next_below(std::uint64_t bound);

  // Independent stream derived from this stream's identity and a role tag.
  RandomStream substream(std::uint64_t role) const;

 private:
  struct from_key_tag {};
  RandomStream(from_key_tag, std::uint64_t key);

  std::uint64_t key_;    // fixed identity
  std::uint64_t state_;  // advances one golden-ratio step per draw
};

}  // namespace bestchoice
