#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hopfcoh/linalg.hpp"
#include "hopfcoh/rational.hpp"

using namespace hopfcoh;

namespace {

SparseMatrix random_sparse(PrimeField f, Index rows, Index cols, double density, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<Elem> val(1, f.p() - 1);
  std::vector<SparseMatrix::Triplet> ts;
  for (Index r = 0; r < rows; ++r)
    for (Index c = 0; c < cols; ++c)
      if (coin(rng) < density) ts.push_back({r, c, val(rng)});
  return SparseMatrix::from_triplets(f, rows, cols, ts);
}

// Counts solutions of m·x = 0 by enumerating F_p^cols; |ker| = p^(cols - rank).
Index brute_force_rank(const SparseMatrix& m) {
  const Index p = m.field().p();
  const Index cols = m.cols();
  Index total = 1;
  for (Index i = 0; i < cols; ++i) total *= p;
  Index zeros = 0;
  std::vector<Elem> x(cols, 0);
  for (Index k = 0; k < total; ++k) {
    Index t = k;
    for (Index i = 0; i < cols; ++i) {
      x[i] = static_cast<Elem>(t % p);
      t /= p;
    }
    auto y = m.apply_dense(x);
    if (std::all_of(y.begin(), y.end(), [](Elem e) { return e == 0; })) ++zeros;
  }
  Index nullity = 0;
  while (zeros > 1) {
    zeros /= p;
    ++nullity;
  }
  return cols - nullity;
}

}  // namespace

TEST_CASE("rank examples") {
  PrimeField f5(5), f2(2);
  CHECK(rank(SparseMatrix::zero(f5, 3, 3)) == 0);
  CHECK(rank(SparseMatrix::identity(f5, 4)) == 4);
  CHECK(rank(SparseMatrix::from_dense(f5, {{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("kernel examples") {
  PrimeField f2(2);
  CHECK(kernel_basis(SparseMatrix::identity(f2, 3)).dim() == 0);
  CHECK(kernel_basis(SparseMatrix::zero(f2, 2, 5)).dim() == 5);
  auto k = kernel_basis(SparseMatrix::from_dense(f2, {{1, 1, 0}, {0, 0, 1}}));
  REQUIRE(k.dim() == 1);
  CHECK(dense_from_sparse(k.vectors[0], 3) == std::vector<Elem>{1, 1, 0});
}

TEST_CASE("solve examples") {
  PrimeField f5(5);
  std::vector<Elem> b{3, 1};
  auto x = solve(SparseMatrix::identity(f5, 2), b);
  REQUIRE(x);
  CHECK(*x == b);
  CHECK_FALSE(solve(SparseMatrix::zero(f5, 2, 2), std::vector<Elem>{1, 0}));
  auto m = SparseMatrix::from_dense(f5, {{1, 2}, {2, 4}});
  auto y = solve(m, std::vector<Elem>{1, 2});
  REQUIRE(y);
  CHECK(f5.add((*y)[0], f5.mul(2, (*y)[1])) == 1);
  CHECK_FALSE(solve(m, std::vector<Elem>{1, 0}));
  CHECK_THROWS_AS(solve(m, std::vector<Elem>{1}), Error);
}

TEST_CASE("stacked kernel examples") {
  PrimeField f3(3);
  std::vector<SparseMatrix> one{SparseMatrix::identity(f3, 3)};
  CHECK(stacked_kernel(one, 3).dim() == 0);
  CHECK(stacked_kernel({}, 3).dim() == 3);
  std::vector<SparseMatrix> rows{SparseMatrix::from_dense(f3, {{1, 0, 0}}), SparseMatrix::from_dense(f3, {{0, 1, 0}})};
  auto k = stacked_kernel(rows, 3);
  REQUIRE(k.dim() == 1);
  CHECK(dense_from_sparse(k.vectors[0], 3) == std::vector<Elem>{0, 0, 1});
}

TEST_CASE("rank agrees with exhaustive enumeration") {
  std::mt19937_64 rng(7);
  for (std::uint32_t p : {2u, 3u}) {
    PrimeField f(p);
    for (int trial = 0; trial < 40; ++trial) {
      Index rows = 1 + rng() % 6, cols = 1 + rng() % 6;
      auto m = random_sparse(f, rows, cols, 0.4, rng);
      CHECK(rank(m) == brute_force_rank(m));
    }
  }
}

TEST_CASE("rank-nullity, kernel and solve properties on random matrices") {
  std::mt19937_64 rng(11);
  for (std::uint32_t p : {2u, 5u, 7u, 2147483647u}) {
    PrimeField f(p);
    for (int trial = 0; trial < 30; ++trial) {
      Index rows = 1 + rng() % 40, cols = 1 + rng() % 40;
      double density = (trial % 3 == 0) ? 0.5 : 0.04;
      auto m = random_sparse(f, rows, cols, density, rng);
      auto k = kernel_basis(m);
      CHECK(rank(m) + k.dim() == cols);
      for (const auto& v : k.vectors) CHECK(m.apply(v).empty());
      CHECK(rank(k.as_matrix(f)) == k.dim());

      std::vector<Elem> x(cols);
      for (auto& e : x) e = static_cast<Elem>(rng() % p);
      auto b = m.apply_dense(x);
      auto sol = solve(m, b);
      REQUIRE(sol);
      CHECK(m.apply_dense(*sol) == b);
    }
  }
}

TEST_CASE("rank invariant under row permutation and row scaling") {
  std::mt19937_64 rng(13);
  PrimeField f(7);
  for (int trial = 0; trial < 20; ++trial) {
    Index rows = 2 + rng() % 20, cols = 2 + rng() % 20;
    auto m = random_sparse(f, rows, cols, 0.2, rng);
    auto dense = m.to_dense();
    std::vector<std::vector<std::int64_t>> permuted;
    std::vector<Index> order(rows);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    for (Index r : order) {
      std::int64_t s = 1 + static_cast<std::int64_t>(rng() % 6);
      std::vector<std::int64_t> row;
      for (Elem e : dense[r]) row.push_back(static_cast<std::int64_t>(e) * s);
      permuted.push_back(row);
    }
    CHECK(rank(SparseMatrix::from_dense(f, permuted)) == rank(m));
  }
}

TEST_CASE("sparse and dense elimination agree") {
  std::mt19937_64 rng(17);
  PrimeField f(5);
  for (int trial = 0; trial < 10; ++trial) {
    auto m = random_sparse(f, 150, 120, 0.02, rng);
    DenseMatrix d = DenseMatrix::from_sparse(m);
    RowEchelon e(f, m.rows());
    for (const auto& c : m.columns()) e.insert(c);
    CHECK(d.echelon().size() == e.rank());
  }
}

TEST_CASE("kernel coordinates read at pivots") {
  std::mt19937_64 rng(19);
  PrimeField f(3);
  auto m = random_sparse(f, 10, 25, 0.2, rng);
  auto k = kernel_basis(m);
  std::vector<Elem> coords(k.dim());
  for (auto& c : coords) c = static_cast<Elem>(rng() % 3);
  CHECK(k.coordinates(k.combine(f, coords)) == coords);
}

TEST_CASE("inverse") {
  PrimeField f(5);
  auto m = SparseMatrix::from_dense(f, {{1, 2, 0}, {0, 1, 3}, {4, 0, 2}});
  auto inv = inverse(m);
  CHECK(m * inv == SparseMatrix::identity(f, 3));
  CHECK_THROWS_AS(inverse(SparseMatrix::from_dense(f, {{1, 2}, {2, 4}})), Error);
}

TEST_CASE("memory guard") {
  Index saved = memory_guard();
  set_memory_guard(10);
  CHECK_THROWS_AS(check_memory_guard(11, "test"), ResourceGuardError);
  CHECK_NOTHROW(check_memory_guard(10, "test"));
  set_memory_guard(saved);
}

TEST_CASE("field construction") {
  CHECK_THROWS_AS(FieldSpec::checked(4), Error);
  CHECK_THROWS_AS(FieldSpec::checked(-3), Error);
  CHECK(FieldSpec::checked(0).is_rational());
  PrimeField f(7);
  CHECK(f.parse("-1") == 6);
  CHECK(f.parse("1/2") == 4);
  CHECK_THROWS_AS(f.parse("x1"), Error);
}

TEST_CASE("rational path") {
  using namespace hopfcoh::rational;
  auto m = QMatrix::from_integers({{1, 2}, {2, 4}});
  CHECK(rational::rank(m) == 1);
  CHECK(rational::rank(QMatrix::from_integers({{1, 2}, {3, 4}})) == 2);
  auto k = rational::kernel_basis(m);
  REQUIRE(k.size() == 1);
  auto z = m.apply(k[0]);
  CHECK(z[0] == 0);
  CHECK(z[1] == 0);
  auto x = rational::solve(m, {Rational(1, 3), Rational(2, 3)});
  REQUIRE(x);
  CHECK(m.apply(*x)[0] == Rational(1, 3));
  CHECK_FALSE(rational::solve(m, {Rational(1), Rational(0)}));
  CHECK(parse("-3/6") == Rational(-1, 2));
}

TEST_CASE("sparse elimination path: kernel, solve and rowspace") {
  std::mt19937_64 rng(23);
  for (std::uint32_t p : {2u, 3u, 65521u}) {
    PrimeField f(p);
    for (int trial = 0; trial < 6; ++trial) {
      Index rows = 150 + rng() % 150, cols = 150 + rng() % 150;
      auto m = random_sparse(f, rows, cols, 0.012, rng);
      auto k = kernel_basis(m);
      CHECK(rank(m) + k.dim() == cols);
      for (const auto& v : k.vectors) CHECK(m.apply(v).empty());
      for (std::size_t i = 0; i < k.dim(); ++i)
        for (std::size_t j = 0; j < k.dim(); ++j) {
          auto it = std::find_if(k.vectors[i].begin(), k.vectors[i].end(),
                                 [&](const Entry& e) { return e.index == k.pivots[j]; });
          Elem c = it == k.vectors[i].end() ? 0 : it->value;
          CHECK(c == (i == j ? 1u : 0u));
        }
      std::vector<Elem> x(cols);
      for (auto& e : x) e = static_cast<Elem>(rng() % p);
      auto b = m.apply_dense(x);
      auto sol = solve(m, b);
      REQUIRE(sol);
      CHECK(m.apply_dense(*sol) == b);

      RowEchelon e(f, cols);
      const SparseMatrix t = m.transpose();
      for (const auto& row : t.columns()) e.insert(row);
      auto rs = e.rowspace();
      CHECK(rs.dim() == e.rank());
      for (const auto& row : t.columns()) CHECK(e.reduce(row).empty());
    }
  }
}
