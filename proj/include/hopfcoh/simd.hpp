#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

// Dense modular row kernels. Every kernel has a scalar reference in simd::scalar
// and, where the CPU allows, an AVX2 variant chosen once at startup.

namespace hopfcoh::simd {

enum class Isa { scalar, avx2 };

struct Kernels {
  /// dst[i] += c * src[i] without reduction. Caller guarantees no overflow past 2^31.
  void (*axpy_lazy)(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c, std::size_t n);
  /// dst[i] %= p for dst[i] < 2^31.
  void (*reduce)(std::uint32_t* dst, std::size_t n, std::uint32_t p);
  /// dst[i] = (dst[i] + c * src[i]) mod p, inputs already reduced, any p < 2^31.
  void (*axpy_mod)(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c, std::size_t n, std::uint32_t p);
  /// dst[i] = c * dst[i] mod p.
  void (*scale_mod)(std::uint32_t* dst, std::uint32_t c, std::size_t n, std::uint32_t p);
  /// Index of the first i with dst[i] % p != 0, or n.
  std::size_t (*first_nonzero_mod)(const std::uint32_t* v, std::size_t n, std::uint32_t p);
};

namespace scalar {
const Kernels& kernels();
}
namespace avx2 {
/// Null when the build has no AVX2 translation unit.
const Kernels* kernels();
}

bool cpu_has_avx2();
Isa active_isa();
std::string_view isa_name(Isa isa);
/// Overrides runtime dispatch; requesting avx2 on a machine without it falls back to scalar.
void force_isa(Isa isa);
const Kernels& kernels();

/// Largest p for which the AVX2 kernels use 32-bit lane arithmetic.
inline constexpr std::uint32_t kVectorPrimeLimit = 1u << 15;

}  // namespace hopfcoh::simd
