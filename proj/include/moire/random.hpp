#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "moire/sequence.hpp"

namespace moire {

// std::mt19937_64 output is fixed by the standard; the top two bits give a
// uniform base on every platform, unlike the distribution templates.
inline DnaBase random_base(std::mt19937_64& rng) { return static_cast<DnaBase>(rng() >> 62); }

inline DnaSequence random_sequence(std::mt19937_64& rng, std::size_t length) {
  std::vector<DnaBase> bases(length);
  for (auto& b : bases) b = random_base(rng);
  return DnaSequence(std::move(bases));
}

// Uniform integer in [0, n) by rejection on the top bits.
inline std::size_t random_below(std::mt19937_64& rng, std::size_t n) {
  if (n <= 1) return 0;
  std::uint64_t mask = n - 1;
  mask |= mask >> 1; mask |= mask >> 2; mask |= mask >> 4;
  mask |= mask >> 8; mask |= mask >> 16; mask |= mask >> 32;
  for (;;) {
    const std::uint64_t v = rng() & mask;
    if (v < n) return static_cast<std::size_t>(v);
  }
}

}  // namespace moire
