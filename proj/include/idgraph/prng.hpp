#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "idgraph/vertex_set.hpp"

namespace idg {

// All randomized kernels draw from mt19937_64. Per-partition streams are
// derived from the user seed with splitmix64 so results are identical for any
// worker count.
using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  return splitmix64(seed ^ splitmix64(stream + 1));
}

// Unbiased draw from [0, bound) that does not depend on the standard
// library's distribution implementation.
inline std::uint64_t bounded_u64(Rng& rng, std::uint64_t bound) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound + 1) % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x > limit);
  return x % bound;
}

inline double unit_double(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform s-subset of {0..n-1} by partial Fisher-Yates.
inline VertexSet random_subset(Rng& rng, int n, int s, std::vector<int>& scratch) {
  scratch.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) scratch[static_cast<std::size_t>(i)] = i;
  VertexSet out;
  for (int i = 0; i < s; ++i) {
    int j = i + static_cast<int>(bounded_u64(rng, static_cast<std::uint64_t>(n - i)));
    std::swap(scratch[static_cast<std::size_t>(i)], scratch[static_cast<std::size_t>(j)]);
    out.add(scratch[static_cast<std::size_t>(i)]);
  }
  return out;
}

}  // namespace idg
