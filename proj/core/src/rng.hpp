#pragma once

#include <cstdint>
#include <random>

namespace fbl::detail {

inline std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Independent stream for trial `index` of a run seeded with `base`.
inline std::mt19937_64 trial_engine(std::uint64_t base, std::uint64_t index) {
  return std::mt19937_64(splitmix64(base ^ index));
}

}  // namespace fbl::detail
