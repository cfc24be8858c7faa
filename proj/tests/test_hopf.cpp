#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfcoh/hopf.hpp"

using namespace hopfcoh;

namespace {

// Elementwise axiom check on dense coefficient arrays, independent of the matrix code.
struct Dense {
  PrimeField f;
  Index n;
  std::vector<Elem> mul;    // mul[(i*n+j)*n+k]
  std::vector<Elem> comul;  // comul[(i*n+j)*n+k]: coefficient of e_j⊗e_k in Δe_i
  std::vector<Elem> unit, counit, S;

  explicit Dense(const HopfAlgebra& h) : f(h.field()), n(h.dim()), unit(h.unit()), counit(h.counit()) {
    mul.assign(n * n * n, 0);
    comul.assign(n * n * n, 0);
    S.assign(n * n, 0);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) {
        for (Index k = 0; k < n; ++k) {
          mul[(i * n + j) * n + k] = h.mul().at(k, i * n + j);
          comul[(i * n + j) * n + k] = h.comul().at(j * n + k, i);
        }
        S[i * n + j] = h.antipode().at(j, i);  // S[i*n+j] = coeff of e_j in S(e_i)
      }
  }
  Elem m(Index i, Index j, Index k) const { return mul[(i * n + j) * n + k]; }
  Elem d(Index i, Index j, Index k) const { return comul[(i * n + j) * n + k]; }

  bool ok() const {
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b)
        for (Index c = 0; c < n; ++c)
          for (Index t = 0; t < n; ++t) {
            Elem l = 0, r = 0;
            for (Index s = 0; s < n; ++s) {
              l = f.add(l, f.mul(m(a, b, s), m(s, c, t)));
              r = f.add(r, f.mul(m(b, c, s), m(a, s, t)));
            }
            if (l != r) return false;
          }
    for (Index a = 0; a < n; ++a)
      for (Index t = 0; t < n; ++t) {
        Elem l = 0, r = 0;
        for (Index s = 0; s < n; ++s) {
          l = f.add(l, f.mul(unit[s], m(s, a, t)));
          r = f.add(r, f.mul(unit[s], m(a, s, t)));
        }
        if (l != (a == t) || r != (a == t)) return false;
      }
    // coassociativity
    for (Index a = 0; a < n; ++a)
      for (Index x = 0; x < n; ++x)
        for (Index y = 0; y < n; ++y)
          for (Index z = 0; z < n; ++z) {
            Elem l = 0, r = 0;
            for (Index s = 0; s < n; ++s) {
              l = f.add(l, f.mul(d(a, s, z), d(s, x, y)));
              r = f.add(r, f.mul(d(a, x, s), d(s, y, z)));
            }
            if (l != r) return false;
          }
    for (Index a = 0; a < n; ++a)
      for (Index t = 0; t < n; ++t) {
        Elem l = 0, r = 0;
        for (Index s = 0; s < n; ++s) {
          l = f.add(l, f.mul(counit[s], d(a, s, t)));
          r = f.add(r, f.mul(counit[s], d(a, t, s)));
        }
        if (l != (a == t) || r != (a == t)) return false;
      }
    // Δ(ab) = Δ(a)Δ(b)
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b)
        for (Index x = 0; x < n; ++x)
          for (Index y = 0; y < n; ++y) {
            Elem l = 0, r = 0;
            for (Index s = 0; s < n; ++s) l = f.add(l, f.mul(m(a, b, s), d(s, x, y)));
            for (Index a1 = 0; a1 < n; ++a1)
              for (Index a2 = 0; a2 < n; ++a2)
                for (Index b1 = 0; b1 < n; ++b1)
                  for (Index b2 = 0; b2 < n; ++b2)
                    r = f.add(r, f.mul(f.mul(d(a, a1, a2), d(b, b1, b2)), f.mul(m(a1, b1, x), m(a2, b2, y))));
            if (l != r) return false;
          }
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b) {
        Elem l = 0;
        for (Index s = 0; s < n; ++s) l = f.add(l, f.mul(m(a, b, s), counit[s]));
        if (l != f.mul(counit[a], counit[b])) return false;
      }
    // S(a1) a2 = ε(a) 1 = a1 S(a2)
    for (Index a = 0; a < n; ++a)
      for (Index t = 0; t < n; ++t) {
        Elem l = 0, r = 0;
        for (Index x = 0; x < n; ++x)
          for (Index y = 0; y < n; ++y)
            for (Index s = 0; s < n; ++s) {
              l = f.add(l, f.mul(f.mul(d(a, x, y), S[x * n + s]), m(s, y, t)));
              r = f.add(r, f.mul(f.mul(d(a, x, y), S[y * n + s]), m(x, s, t)));
            }
        Elem want = f.mul(counit[a], unit[t]);
        if (l != want || r != want) return false;
      }
    return true;
  }
};

}  // namespace

TEST_CASE("built-in algebras satisfy the axioms") {
  for (auto h : {cyclic_group_algebra(1, PrimeField(2)), cyclic_group_algebra(2, PrimeField(2)),
                 cyclic_group_algebra(3, PrimeField(5)), symmetric_group_s3(PrimeField(7)), sweedler_h4(PrimeField(5)),
                 sweedler_h4(PrimeField(3)), taft(3, PrimeField(7), 2), dual(sweedler_h4(PrimeField(5))),
                 dual(cyclic_group_algebra(2, PrimeField(3)))}) {
    CAPTURE(h.name());
    CHECK(verify_hopf(h).empty());
    CHECK(Dense(h).ok());
  }
}

TEST_CASE("trivial group and Z/2") {
  auto t = cyclic_group_algebra(1, PrimeField(3));
  CHECK(t.dim() == 1);
  CHECK(t.mul().at(0, 0) == 1);
  CHECK(t.comul().at(0, 0) == 1);
  CHECK(t.antipode().at(0, 0) == 1);
  auto z2 = cyclic_group_algebra(2, PrimeField(2));
  CHECK(z2.dim() == 2);
  CHECK(z2.antipode() == SparseMatrix::identity(PrimeField(2), 2));
  CHECK(symmetric_group_s3(PrimeField(7)).dim() == 6);
}

TEST_CASE("bad group tables are rejected") {
  CHECK_THROWS_WITH_AS(group_algebra({{0, 1}, {1, 1}}, PrimeField(2)), doctest::Contains("inverse"), Error);
  CHECK_THROWS_WITH_AS(group_algebra({{0, 0}, {0, 0}}, PrimeField(2)), doctest::Contains("identity"), Error);
  CHECK_THROWS_AS(group_algebra({{0, 1}, {1}}, PrimeField(2)), Error);
  CHECK_THROWS_WITH_AS(group_algebra({{0, 1, 2}, {1, 0, 0}, {2, 0, 0}}, PrimeField(2)), doctest::Contains("associativity"),
                       Error);
}

TEST_CASE("antipode replaced by identity is detected") {
  auto h = sweedler_h4(PrimeField(5));
  HopfAlgebra broken(h.field(), h.mul(), h.unit(), h.comul(), h.counit(), h.identity(), std::nullopt, "broken");
  auto report = verify_hopf(broken);
  CHECK(std::find(report.begin(), report.end(), "antipode") != report.end());
  CHECK_FALSE(Dense(broken).ok());
}

TEST_CASE("sweedler facts") {
  PrimeField f(5);
  auto h = sweedler_h4(f);
  auto s2 = h.antipode() * h.antipode();
  CHECK(s2 != h.identity());
  CHECK(s2.column(2) == SparseVec{{2, 4}});
  CHECK(h.counit()[3] == 0);
  CHECK_THROWS_AS(sweedler_h4(PrimeField(2)), Error);
}

TEST_CASE("taft") {
  PrimeField f5(5);
  auto t = taft(2, f5, 4);
  auto s = sweedler_h4(f5);
  CHECK(t.mul() == s.mul());
  CHECK(t.comul() == s.comul());
  CHECK(t.unit() == s.unit());
  CHECK(t.counit() == s.counit());
  CHECK(t.antipode() == s.antipode());
  CHECK(taft(3, PrimeField(7), 2).dim() == 9);
  for (Elem q = 0; q < 5; ++q) CHECK_THROWS_AS(taft(3, f5, q), Error);
  CHECK_THROWS_AS(taft(4, f5, 4), Error);
}

TEST_CASE("dual and opposite") {
  auto h = sweedler_h4(PrimeField(5));
  auto dd = dual(dual(h));
  CHECK(dd.mul() == h.mul());
  CHECK(dd.comul() == h.comul());
  CHECK(dd.antipode() == h.antipode());
  CHECK(dd.unit() == h.unit());

  auto z2 = cyclic_group_algebra(2, PrimeField(3));
  CHECK(opposite(z2).mul() == z2.mul());
  auto op = opposite(h);
  CHECK(opposite(op).mul() == h.mul());
  SparseVec gx{{3, 1}}, x{{2, 1}};
  CHECK(multiply(h, gx, x) == multiply(op, x, gx));
  SparseVec g{{1, 1}};
  CHECK(multiply(op, gx, x) == multiply(op, x, gx));
  CHECK(multiply(op, g, x) != multiply(op, x, g));
  CHECK(multiply(h, x, SparseVec{{1, 1}}) == SparseVec{{3, 4}});

  // function algebra on Z/2: dual basis idempotents
  auto fz = dual(z2);
  CHECK(multiply(fz, SparseVec{{0, 1}}, SparseVec{{0, 1}}) == SparseVec{{0, 1}});
  CHECK(multiply(fz, SparseVec{{0, 1}}, SparseVec{{1, 1}}).empty());
}

TEST_CASE("iterated comultiplication") {
  auto h = sweedler_h4(PrimeField(5));
  CHECK(iterated_comul(h, -1) == h.counit_map());
  CHECK(iterated_comul(h, 0) == h.identity());
  CHECK(iterated_comul(h, 1) == h.comul());
  CHECK_THROWS_AS(iterated_comul(h, -2), Error);
  for (int u = 0; u <= 2; ++u)
    for (int v = 0; v <= 2; ++v)
      CHECK(iterated_comul(h, u + v + 1) == kron(iterated_comul(h, u), iterated_comul(h, v)) * h.comul());
  auto z2 = cyclic_group_algebra(2, PrimeField(2));
  CHECK(iterated_comul(z2, 2).column(1) == SparseVec{{7, 1}});
}

TEST_CASE("iterated multiplication") {
  auto h = sweedler_h4(PrimeField(3));
  CHECK(iterated_mul(h, 0) == h.unit_map());
  CHECK(iterated_mul(h, 1) == h.identity());
  CHECK(iterated_mul(h, 2) == h.mul());
  CHECK(iterated_mul(h, 3) == h.mul() * kron(h.identity(), h.mul()));
  SparseVec g{{1, 1}}, x{{2, 1}};
  // g ⊗ x ⊗ g ↦ g x g = −x
  CHECK(iterated_mul(h, 3).column(1 * 16 + 2 * 4 + 1) == SparseVec{{2, 2}});
}

TEST_CASE("tensor product algebra multiplication") {
  auto h = sweedler_h4(PrimeField(5));
  SparseVec dx = h.coproduct(2), dg = h.coproduct(1);
  CHECK(multiply_tensor(h, 2, dg, dx) == h.comul().apply(multiply(h, SparseVec{{1, 1}}, SparseVec{{2, 1}})));
}
