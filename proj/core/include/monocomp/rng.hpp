#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace monocomp {

using Seed = std::uint64_t;
using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Per-trial stream derivation: trials are reproducible individually, without
// replaying earlier trials. Documented in the README.
inline Seed derive_seed(Seed master, std::uint64_t n, std::uint64_t trial) {
  return splitmix64(splitmix64(splitmix64(master) ^ n) ^ trial);
}

// Uniform draw from [0, k) by masked rejection. Pinned to the raw mt19937_64
// stream so output does not depend on the standard library's distributions.
inline std::uint64_t bounded(Rng& rng, std::uint64_t k) {
  if (k <= 1) return 0;
  const std::uint64_t mask = ~0ull >> std::countl_zero(k - 1);
  for (;;) {
    const std::uint64_t r = rng() & mask;
    if (r < k) return r;
  }
}

// Fisher-Yates on top of bounded(), same portability guarantee.
template <typename T>
void shuffle_vec(std::vector<T>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(bounded(rng, i));
    std::swap(v[i - 1], v[j]);
  }
}

}  // namespace monocomp
