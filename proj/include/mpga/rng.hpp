#pragma once

#include <cstdint>
#include <random>

namespace mpga {

using Rng = std::mt19937_64;

/// SplitMix64 output finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Seed of run `run_index` in an experiment. Depends only on the pair, so
/// results do not depend on how runs are scheduled.
constexpr std::uint64_t derive_run_seed(std::uint64_t base_seed, std::uint64_t run_index) {
  return mix64(base_seed ^ (run_index * 0x9E3779B97F4A7C15ULL));
}

}  // namespace mpga
