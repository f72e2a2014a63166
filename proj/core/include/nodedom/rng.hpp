#pragma once

#include <cassert>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace nodedom {

// Seeded randomness helpers built directly on the mt19937_64 output stream.
// std::uniform_*_distribution and std::shuffle are implementation-defined, so
// reports produced with them would not replay across standard libraries.

/// Uniform double in [0, 1) using the top 53 bits of one engine draw.
inline double uniform_real(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform integer in [0, bound) via masked rejection (no modulo bias).
inline std::uint64_t uniform_index(std::mt19937_64& rng, std::uint64_t bound) {
  assert(bound > 0);
  std::uint64_t mask = bound - 1;
  mask |= mask >> 1;
  mask |= mask >> 2;
  mask |= mask >> 4;
  mask |= mask >> 8;
  mask |= mask >> 16;
  mask |= mask >> 32;
  for (;;) {
    const std::uint64_t draw = rng() & mask;
    if (draw < bound) return draw;
  }
}

/// Fisher-Yates shuffle.
template <typename T>
void shuffle(std::vector<T>& values, std::mt19937_64& rng) {
  for (std::size_t i = values.size(); i > 1; --i) {
    const std::uint64_t j = uniform_index(rng, i);
    std::swap(values[i - 1], values[j]);
  }
}

/// k distinct values from [0, n), ascending. Partial Fisher-Yates, then sort.
std::vector<std::uint32_t> sample_without_replacement(std::uint32_t n, std::uint32_t k,
                                                      std::mt19937_64& rng);

}  // namespace nodedom
