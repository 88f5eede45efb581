#pragma once
// Word-parallel bit kernels with a scalar reference and runtime-selected
// vector variants. All variants must produce bit-identical results.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace mpga::simd {

enum class Isa { Scalar, Avx2, Avx512 };

using XorPopcountFn = std::uint64_t (*)(const std::uint64_t* a, const std::uint64_t* b,
                                        std::size_t words);
// out[k] = (a[k] & ~mask[k]) | (b[k] & mask[k])
using BlendFn = void (*)(const std::uint64_t* a, const std::uint64_t* b,
                         const std::uint64_t* mask, std::uint64_t* out, std::size_t words);

struct Kernels {
  Isa isa;
  XorPopcountFn xor_popcount;
  BlendFn blend;
};

std::string_view name(Isa isa);
std::optional<Isa> parse_isa(std::string_view text);

/// Kernels for `isa`, or nullptr when the build or the running CPU lacks it.
const Kernels* kernels_for(Isa isa);

/// The kernel table used by the library. Picks the widest supported ISA on
/// first use; the MPGA_SIMD environment variable (scalar|avx2|avx512) caps it.
const Kernels& active();

/// Forces a specific ISA. Returns false (and changes nothing) if unsupported.
bool select(Isa isa);

namespace scalar {
std::uint64_t xor_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
void blend(const std::uint64_t* a, const std::uint64_t* b, const std::uint64_t* mask,
           std::uint64_t* out, std::size_t words);
}  // namespace scalar

namespace avx2 {
std::uint64_t xor_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
void blend(const std::uint64_t* a, const std::uint64_t* b, const std::uint64_t* mask,
           std::uint64_t* out, std::size_t words);
}  // namespace avx2

namespace avx512 {
std::uint64_t xor_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
void blend(const std::uint64_t* a, const std::uint64_t* b, const std::uint64_t* mask,
           std::uint64_t* out, std::size_t words);
}  // namespace avx512

}  // namespace mpga::simd
