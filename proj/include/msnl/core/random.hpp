#ifndef MSNL_CORE_RANDOM_HPP_
#define MSNL_CORE_RANDOM_HPP_

#include <cstdint>
#include <random>

namespace msnl {

// The standard distributions are implementation-defined, so sampling is done
// by hand on top of mt19937_64 to keep runs reproducible across toolchains.

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seed of the `counter`-th stream derived from `master`.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t counter) {
  return splitmix64(splitmix64(master) + counter);
}

using Rng = std::mt19937_64;

/// Uniform on [0, 1) with 53 random bits.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform on {0, ..., bound-1}; bound must be positive.
inline std::uint64_t uniform_index(Rng& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t r;
  do {
    r = rng();
  } while (r >= limit);
  return r % bound;
}

}  // namespace msnl

#endif  // MSNL_CORE_RANDOM_HPP_
