#include <immintrin.h>

#include "hopfcoh/simd.hpp"

namespace hopfcoh::simd::avx2 {
namespace {

// Exact residue of eight non-negative int32 lanes via a double-precision quotient.
inline __m256i reduce8(__m256i v, __m256d pd, __m256d pinv) {
  auto half = [&](__m128i x) {
    __m256d d = _mm256_cvtepi32_pd(x);
    __m256d q = _mm256_floor_pd(_mm256_mul_pd(d, pinv));
    __m256d r = _mm256_sub_pd(d, _mm256_mul_pd(q, pd));
    r = _mm256_add_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, _mm256_setzero_pd(), _CMP_LT_OQ), pd));
    r = _mm256_sub_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, pd, _CMP_GE_OQ), pd));
    return _mm256_cvttpd_epi32(r);
  };
  __m128i lo = half(_mm256_castsi256_si128(v));
  __m128i hi = half(_mm256_extracti128_si256(v, 1));
  return _mm256_set_m128i(hi, lo);
}

void axpy_lazy(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c, std::size_t n) {
  const __m256i cv = _mm256_set1_epi32(static_cast<int>(c));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    d = _mm256_add_epi32(d, _mm256_mullo_epi32(s, cv));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), d);
  }
  for (; i < n; ++i) dst[i] += c * src[i];
}

void reduce(std::uint32_t* dst, std::size_t n, std::uint32_t p) {
  const __m256d pd = _mm256_set1_pd(static_cast<double>(p));
  const __m256d pinv = _mm256_set1_pd(1.0 / static_cast<double>(p));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), reduce8(d, pd, pinv));
  }
  for (; i < n; ++i) dst[i] %= p;
}

void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c, std::size_t n, std::uint32_t p) {
  if (p >= kVectorPrimeLimit) return scalar::kernels().axpy_mod(dst, src, c, n, p);
  const __m256i cv = _mm256_set1_epi32(static_cast<int>(c));
  const __m256d pd = _mm256_set1_pd(static_cast<double>(p));
  const __m256d pinv = _mm256_set1_pd(1.0 / static_cast<double>(p));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    d = _mm256_add_epi32(d, _mm256_mullo_epi32(s, cv));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), reduce8(d, pd, pinv));
  }
  if (i < n) scalar::kernels().axpy_mod(dst + i, src + i, c, n - i, p);
}

void scale_mod(std::uint32_t* dst, std::uint32_t c, std::size_t n, std::uint32_t p) {
  if (p >= kVectorPrimeLimit) return scalar::kernels().scale_mod(dst, c, n, p);
  const __m256i cv = _mm256_set1_epi32(static_cast<int>(c));
  const __m256d pd = _mm256_set1_pd(static_cast<double>(p));
  const __m256d pinv = _mm256_set1_pd(1.0 / static_cast<double>(p));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), reduce8(_mm256_mullo_epi32(d, cv), pd, pinv));
  }
  if (i < n) scalar::kernels().scale_mod(dst + i, c, n - i, p);
}

std::size_t first_nonzero_mod(const std::uint32_t* v, std::size_t n, std::uint32_t p) {
  const __m256d pd = _mm256_set1_pd(static_cast<double>(p));
  const __m256d pinv = _mm256_set1_pd(1.0 / static_cast<double>(p));
  const __m256i zero = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + i));
    if (_mm256_testz_si256(d, d)) continue;
    __m256i r = reduce8(d, pd, pinv);
    unsigned mask = ~static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpeq_epi32(r, zero)))) & 0xffu;
    if (mask) return i + static_cast<std::size_t>(__builtin_ctz(mask));
  }
  for (; i < n; ++i)
    if (v[i] % p) return i;
  return n;
}

}  // namespace

const Kernels* kernels() {
  static const Kernels k{axpy_lazy, reduce, axpy_mod, scale_mod, first_nonzero_mod};
  return &k;
}

}  // namespace hopfcoh::simd::avx2
