#include <atomic>
#include <cstdlib>
#include <string>

#include "hopfcoh/simd.hpp"

namespace hopfcoh::simd {

namespace scalar {
namespace {

void axpy_lazy(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] += c * src[i];
}

void reduce(std::uint32_t* dst, std::size_t n, std::uint32_t p) {
  for (std::size_t i = 0; i < n; ++i) dst[i] %= p;
}

void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c, std::size_t n, std::uint32_t p) {
  for (std::size_t i = 0; i < n; ++i)
    dst[i] = static_cast<std::uint32_t>((dst[i] + static_cast<std::uint64_t>(c) * src[i]) % p);
}

void scale_mod(std::uint32_t* dst, std::uint32_t c, std::size_t n, std::uint32_t p) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(c) * dst[i] % p);
}

std::size_t first_nonzero_mod(const std::uint32_t* v, std::size_t n, std::uint32_t p) {
  for (std::size_t i = 0; i < n; ++i)
    if (v[i] % p) return i;
  return n;
}

}  // namespace

const Kernels& kernels() {
  static const Kernels k{axpy_lazy, reduce, axpy_mod, scale_mod, first_nonzero_mod};
  return k;
}

}  // namespace scalar

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

namespace {

Isa detect() {
  if (const char* env = std::getenv("HOPFCOH_ISA"); env && std::string(env) == "scalar") return Isa::scalar;
  return (cpu_has_avx2() && avx2::kernels()) ? Isa::avx2 : Isa::scalar;
}

std::atomic<Isa>& current() {
  static std::atomic<Isa> isa{detect()};
  return isa;
}

}  // namespace

Isa active_isa() { return current().load(); }

std::string_view isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

void force_isa(Isa isa) {
  if (isa == Isa::avx2 && !(cpu_has_avx2() && avx2::kernels())) isa = Isa::scalar;
  current().store(isa);
}

const Kernels& kernels() {
  if (active_isa() == Isa::avx2) return *avx2::kernels();
  return scalar::kernels();
}

}  // namespace hopfcoh::simd
