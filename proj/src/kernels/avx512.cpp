// Compiled with -mavx512f -mavx512vpopcntdq. Tails use masked loads, so there
// is no scalar remainder loop.
#include "mpga/simd.hpp"

#include <immintrin.h>

namespace mpga::simd::avx512 {

namespace {

inline __mmask8 tail_mask(std::size_t remaining) {
  return remaining >= 8 ? static_cast<__mmask8>(0xff)
                        : static_cast<__mmask8>((1u << remaining) - 1u);
}

}  // namespace

std::uint64_t xor_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  __m512i acc = _mm512_setzero_si512();
  for (std::size_t k = 0; k < words; k += 8) {
    const __mmask8 m = tail_mask(words - k);
    const __m512i va = _mm512_maskz_loadu_epi64(m, a + k);
    const __m512i vb = _mm512_maskz_loadu_epi64(m, b + k);
    acc = _mm512_add_epi64(acc, _mm512_popcnt_epi64(_mm512_xor_si512(va, vb)));
  }
  return static_cast<std::uint64_t>(_mm512_reduce_add_epi64(acc));
}

void blend(const std::uint64_t* a, const std::uint64_t* b, const std::uint64_t* mask,
           std::uint64_t* out, std::size_t words) {
  for (std::size_t k = 0; k < words; k += 8) {
    const __mmask8 m = tail_mask(words - k);
    const __m512i va = _mm512_maskz_loadu_epi64(m, a + k);
    const __m512i vb = _mm512_maskz_loadu_epi64(m, b + k);
    const __m512i vm = _mm512_maskz_loadu_epi64(m, mask + k);
    // 0xCA: select b where mask bit is set, a elsewhere.
    const __m512i r = _mm512_ternarylogic_epi64(vm, vb, va, 0xCA);
    _mm512_mask_storeu_epi64(out + k, m, r);
  }
}

}  // namespace mpga::simd::avx512
