#include "mpga/simd.hpp"

#include <atomic>
#include <cstdlib>

namespace mpga::simd {

namespace {

constexpr Kernels kScalar{Isa::Scalar, &scalar::xor_popcount, &scalar::blend};
#if MPGA_HAVE_X86_KERNELS
constexpr Kernels kAvx2{Isa::Avx2, &avx2::xor_popcount, &avx2::blend};
constexpr Kernels kAvx512{Isa::Avx512, &avx512::xor_popcount, &avx512::blend};
#endif

bool cpu_supports(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return true;
#if MPGA_HAVE_X86_KERNELS
    case Isa::Avx2:
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
    case Isa::Avx512:
      return __builtin_cpu_supports("avx512f") && __builtin_cpu_supports("avx512vpopcntdq");
#else
    default:
      return false;
#endif
  }
  return false;
}

const Kernels* best_available() {
  Isa cap = Isa::Avx512;
  if (const char* env = std::getenv("MPGA_SIMD")) {
    if (const auto parsed = parse_isa(env)) cap = *parsed;
  }
  for (Isa isa : {Isa::Avx512, Isa::Avx2}) {
    if (static_cast<int>(isa) <= static_cast<int>(cap)) {
      if (const Kernels* k = kernels_for(isa)) return k;
    }
  }
  return &kScalar;
}

std::atomic<const Kernels*>& current() {
  static std::atomic<const Kernels*> table{best_available()};
  return table;
}

}  // namespace

std::string_view name(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Avx512: return "avx512";
  }
  return "unknown";
}

std::optional<Isa> parse_isa(std::string_view text) {
  if (text == "scalar") return Isa::Scalar;
  if (text == "avx2") return Isa::Avx2;
  if (text == "avx512") return Isa::Avx512;
  return std::nullopt;
}

const Kernels* kernels_for(Isa isa) {
  if (!cpu_supports(isa)) return nullptr;
  switch (isa) {
    case Isa::Scalar: return &kScalar;
#if MPGA_HAVE_X86_KERNELS
    case Isa::Avx2: return &kAvx2;
    case Isa::Avx512: return &kAvx512;
#else
    default: return nullptr;
#endif
  }
  return nullptr;
}

const Kernels& active() { return *current().load(std::memory_order_relaxed); }

bool select(Isa isa) {
  const Kernels* k = kernels_for(isa);
  if (k == nullptr) return false;
  current().store(k, std::memory_order_relaxed);
  return true;
}

}  // namespace mpga::simd
