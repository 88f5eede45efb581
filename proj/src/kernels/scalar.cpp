#include "mpga/simd.hpp"

#include <bit>

namespace mpga::simd::scalar {

std::uint64_t xor_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  std::uint64_t total = 0;
  for (std::size_t k = 0; k < words; ++k) {
    total += static_cast<std::uint64_t>(std::popcount(a[k] ^ b[k]));
  }
  return total;
}

void blend(const std::uint64_t* a, const std::uint64_t* b, const std::uint64_t* mask,
           std::uint64_t* out, std::size_t words) {
  for (std::size_t k = 0; k < words; ++k) {
    out[k] = (a[k] & ~mask[k]) | (b[k] & mask[k]);
  }
}

}  // namespace mpga::simd::scalar
