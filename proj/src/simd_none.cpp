#include "hopfcoh/simd.hpp"

namespace hopfcoh::simd::avx2 {
const Kernels* kernels() { return nullptr; }
}  // namespace hopfcoh::simd::avx2
