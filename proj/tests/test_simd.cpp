#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "hopfcoh/linalg.hpp"
#include "hopfcoh/simd.hpp"

using namespace hopfcoh;

namespace {

std::vector<std::uint32_t> random_vec(std::size_t n, std::uint32_t bound, std::mt19937_64& rng) {
  std::vector<std::uint32_t> v(n);
  for (auto& e : v) e = static_cast<std::uint32_t>(rng() % bound);
  return v;
}

const simd::Kernels* vector_kernels() {
  if (!simd::cpu_has_avx2()) return nullptr;
  return simd::avx2::kernels();
}

}  // namespace

TEST_CASE("avx2 kernels match scalar reference") {
  const auto* vk = vector_kernels();
  if (!vk) {
    MESSAGE("no AVX2 on this machine, skipping");
    return;
  }
  const auto& sk = simd::scalar::kernels();
  std::mt19937_64 rng(3);
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 251u, 32749u, 65521u, 2147483647u}) {
    for (std::size_t n : {0u, 1u, 7u, 8u, 9u, 31u, 64u, 100u}) {
      auto src = random_vec(n, p, rng);
      std::uint32_t c = static_cast<std::uint32_t>(rng() % p);

      auto a = random_vec(n, p, rng), b = a;
      sk.axpy_mod(a.data(), src.data(), c, n, p);
      vk->axpy_mod(b.data(), src.data(), c, n, p);
      CHECK(a == b);

      a = random_vec(n, p, rng);
      b = a;
      sk.scale_mod(a.data(), c, n, p);
      vk->scale_mod(b.data(), c, n, p);
      CHECK(a == b);

      a = random_vec(n, 1u << 31, rng);
      b = a;
      sk.reduce(a.data(), n, p);
      vk->reduce(b.data(), n, p);
      CHECK(a == b);

      a = random_vec(n, p, rng);
      if (n > 3) std::fill(a.begin(), a.begin() + n / 2, 0u);
      CHECK(sk.first_nonzero_mod(a.data(), n, p) == vk->first_nonzero_mod(a.data(), n, p));
      std::vector<std::uint32_t> z(n, p);
      CHECK(vk->first_nonzero_mod(z.data(), n, p) == n);

      if (p < simd::kVectorPrimeLimit) {
        a = random_vec(n, 1u << 20, rng);
        b = a;
        sk.axpy_lazy(a.data(), src.data(), c, n);
        vk->axpy_lazy(b.data(), src.data(), c, n);
        CHECK(a == b);
      }
    }
  }
}

TEST_CASE("scalar reduce is exact at the boundary") {
  const auto& sk = simd::scalar::kernels();
  std::vector<std::uint32_t> v{0u, 4u, 5u, (1u << 31) - 1};
  sk.reduce(v.data(), v.size(), 5);
  CHECK(v == std::vector<std::uint32_t>{0, 4, 0, ((1u << 31) - 1) % 5});
}

TEST_CASE("forced isa gives identical dense elimination") {
  std::mt19937_64 rng(5);
  for (std::uint32_t p : {2u, 3u, 5u, 32749u, 2147483647u}) {
    PrimeField f(p);
    std::vector<SparseMatrix::Triplet> ts;
    for (Index r = 0; r < 60; ++r)
      for (Index c = 0; c < 70; ++c)
        if (rng() % 3 == 0) ts.push_back({r, c, static_cast<Elem>(rng() % p)});
    auto m = SparseMatrix::from_triplets(f, 60, 70, ts);

    simd::force_isa(simd::Isa::scalar);
    auto d1 = DenseMatrix::from_sparse(m);
    auto piv1 = d1.rref();
    simd::force_isa(simd::Isa::avx2);
    auto d2 = DenseMatrix::from_sparse(m);
    auto piv2 = d2.rref();
    CHECK(piv1 == piv2);
    for (Index r = 0; r < d1.rows(); ++r)
      for (Index c = 0; c < d1.cols(); ++c) CHECK(d1.get(r, c) == d2.get(r, c));
  }
}
