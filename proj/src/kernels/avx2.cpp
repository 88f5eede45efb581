// Compiled with -mavx2. Only reached through the dispatcher after a CPU check.
#include "mpga/simd.hpp"

#include <immintrin.h>

#include <bit>

namespace mpga::simd::avx2 {

namespace {

// Nibble-lookup popcount (Mula), accumulated per 64-bit lane with vpsadbw.
inline __m256i popcount_lanes(__m256i v) {
  const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                          0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(v, low_mask);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
  const __m256i counts =
      _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
  return _mm256_sad_epu8(counts, _mm256_setzero_si256());
}

}  // namespace

std::uint64_t xor_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t k = 0;
  for (; k + 4 <= words; k += 4) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + k));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + k));
    acc = _mm256_add_epi64(acc, popcount_lanes(_mm256_xor_si256(va, vb)));
  }
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  std::uint64_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; k < words; ++k) {
    total += static_cast<std::uint64_t>(std::popcount(a[k] ^ b[k]));
  }
  return total;
}

void blend(const std::uint64_t* a, const std::uint64_t* b, const std::uint64_t* mask,
           std::uint64_t* out, std::size_t words) {
  std::size_t k = 0;
  for (; k + 4 <= words; k += 4) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + k));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + k));
    const __m256i vm = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(mask + k));
    const __m256i r = _mm256_or_si256(_mm256_andnot_si256(vm, va), _mm256_and_si256(vm, vb));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + k), r);
  }
  for (; k < words; ++k) {
    out[k] = (a[k] & ~mask[k]) | (b[k] & mask[k]);
  }
}

}  // namespace mpga::simd::avx2
