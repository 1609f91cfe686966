#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace greedyorder {

// Draw helpers on top of std::mt19937_64. The engine's output sequence is
// pinned by the standard; the <random> distributions are not, so seeded runs
// that go through these helpers reproduce bit-for-bit everywhere.

// Uniform integer in [0, bound). bound must be > 0.
inline std::uint64_t uniform_index(std::mt19937_64& rng, std::uint64_t bound) {
  return rng() % bound;
}

// Uniform double in [0, 1) with 53 random bits.
inline double uniform_real01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Fisher-Yates shuffle.
template <typename T>
void shuffle_in_place(std::vector<T>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(uniform_index(rng, i));
    std::swap(v[i - 1], v[j]);
  }
}

}  // namespace greedyorder
