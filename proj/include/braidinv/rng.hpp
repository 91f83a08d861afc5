#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace braidinv {

// mt19937_64 output sequences are fixed by the standard, and the bounded
// draw below avoids std::uniform_int_distribution, whose mapping is
// implementation-defined.  Together they make every seeded run reproducible
// across platforms and compilers.

inline std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Per-case seed derived from a master seed and a case counter.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(master ^ splitmix64(index + 1));
}

// Uniform draw from [0, n) by rejection sampling.
inline std::uint64_t draw_below(std::mt19937_64 &gen, std::uint64_t n) {
  const std::uint64_t maxv = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t bound = maxv - maxv % n;  // multiple of n
  for (;;) {
    std::uint64_t r = gen();
    if (r < bound) return r % n;
  }
}

// Uniform draw from the inclusive range [lo, hi].
inline std::int64_t draw_range(std::mt19937_64 &gen, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(
                  draw_below(gen, static_cast<std::uint64_t>(hi - lo + 1)));
}

}  // namespace braidinv
