#pragma once

// Sampling helpers that only consume raw mt19937_64 output, so every stream
// is reproducible across standard libraries (std::*_distribution is not).

#include <cstdint>
#include <random>

namespace lrq {

inline std::uint64_t uniform_below(std::mt19937_64 &rng, std::uint64_t n) {
  if (n <= 1)
    return 0;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do
    x = rng();
  while (x >= limit);
  return x % n;
}

inline double uniform01(std::mt19937_64 &rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline bool bernoulli(std::mt19937_64 &rng, double p) {
  return uniform01(rng) < p;
}

/// Independent stream for (seed, index); used for per-trial RNGs so results
/// do not depend on scheduling.
inline std::mt19937_64 derived_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(index >> 32), 0x9e3779b9u};
  return std::mt19937_64(seq);
}

template <class It> void shuffle_range(It first, It last, std::mt19937_64 &rng) {
  auto n = static_cast<std::uint64_t>(last - first);
  for (std::uint64_t i = n; i > 1; --i) {
    std::uint64_t j = uniform_below(rng, i);
    std::swap(first[i - 1], first[j]);
  }
}

} // namespace lrq
