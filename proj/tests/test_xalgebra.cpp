#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfcoh/xalgebra.hpp"

using namespace hopfcoh;

namespace {

AlgebraPtr kz2(std::uint32_t p) { return std::make_shared<HopfAlgebra>(cyclic_group_algebra(2, PrimeField(p))); }
AlgebraPtr h4(std::uint32_t p) { return std::make_shared<HopfAlgebra>(sweedler_h4(PrimeField(p))); }

Elem coeff(const SparseVec& v, Index i) {
  for (const Entry& e : v)
    if (e.index == i) return e.value;
  return 0;
}

// [(l⊗k)⊗(a⊗b)]·m = Σ l(a¹ m₋₁ b¹) k(a³ m₁ b³) a² m₀ b², transcribed term by term.
SparseVec literal_action(const HopfBimodule& m, Index i, Index j, Index k, Index l, Index v) {
  const HopfAlgebra& h = *m.algebra;
  const PrimeField f = h.field();
  const Index n = h.dim(), dm = m.dim;
  const SparseMatrix d2 = iterated_comul(h, 2);
  const SparseMatrix coact = kron(m.coact_left, h.identity()) * m.coact_right;
  Accumulator acc(f, dm);
  for (const Entry& x : d2.column(k))
    for (const Entry& y : d2.column(l))
      for (const Entry& z : coact.column(v)) {
        const Index a1 = x.index / (n * n), a2 = (x.index / n) % n, a3 = x.index % n;
        const Index b1 = y.index / (n * n), b2 = (y.index / n) % n, b3 = y.index % n;
        const Index mm = z.index / (dm * n), m0 = (z.index / n) % dm, mp = z.index % n;
        Elem left = coeff(multiply(h, multiply(h, {{a1, 1}}, {{mm, 1}}), {{b1, 1}}), i);
        Elem right = coeff(multiply(h, multiply(h, {{a3, 1}}, {{mp, 1}}), {{b3, 1}}), j);
        Elem c = f.mul(f.mul(x.value, y.value), f.mul(z.value, f.mul(left, right)));
        if (!c) continue;
        SparseVec mid = m.act_left.column(a2 * dm + m0);
        for (const Entry& t : mid) acc.axpy(f.mul(c, t.value), m.act_right.column(t.index * n + b2));
      }
  return acc.take();
}

std::vector<HopfBimodule> corpus() {
  std::vector<HopfBimodule> out;
  for (auto h : {kz2(2), kz2(3), h4(5)}) {
    auto r = regular_bimodule(h);
    out.push_back(r);
    out.push_back(right_tensor_power(r, 1));
    out.push_back(left_tensor_power(r, 1));
  }
  out.push_back(bar_term(regular_bimodule(kz2(2)), 0));
  out.push_back(cobar_term(regular_bimodule(kz2(3)), 0));
  return out;
}

}  // namespace

TEST_CASE("X over kZ/2 is associative and unital, exhaustively") {
  for (auto h : {kz2(2), kz2(3)}) {
    XAlgebra x(h);
    CHECK(x.dim() == 16);
    CHECK(verify_x_associativity(x, -1).empty());
  }
}

TEST_CASE("X over H4 is associative on sampled triples") {
  XAlgebra x(h4(5));
  CHECK(x.dim() == 256);
  CHECK(verify_x_associativity(x, 1000, 7).empty());
}

TEST_CASE("subalgebras multiply componentwise") {
  XAlgebra x(h4(3));
  const auto& h = *x.base();
  const auto& d = x.dual_algebra();
  auto eps = x.counit_vector(), one = x.unit_vector();
  for (Index a = 0; a < 4; ++a)
    for (Index b = 0; b < 4; ++b) {
      SparseVec ea{{a, 1}}, eb{{b, 1}};
      // A⊗Aᵒᵖ: (a⊗1)(b⊗1) = ab⊗1 and (1⊗a)(1⊗b) = 1⊗ba
      CHECK(x.multiply(x.element(eps, eps, ea, one), x.element(eps, eps, eb, one)) ==
            x.element(eps, eps, multiply(h, ea, eb), one));
      CHECK(x.multiply(x.element(eps, eps, one, ea), x.element(eps, eps, one, eb)) ==
            x.element(eps, eps, one, multiply(h, eb, ea)));
      // A*ᵒᵖ⊗A*
      CHECK(x.multiply(x.element(ea, eps, one, one), x.element(eb, eps, one, one)) ==
            x.element(multiply(d, eb, ea), eps, one, one));
      CHECK(x.multiply(x.element(eps, ea, one, one), x.element(eps, eb, one, one)) ==
            x.element(eps, multiply(d, ea, eb), one, one));
    }
}

TEST_CASE("X-module structure matches the printed action formula") {
  for (const auto& m : corpus()) {
    CAPTURE(m.name);
    XAlgebra x(m.algebra);
    auto xm = bimodule_to_xmodule(m, x);
    const Index n = x.n();
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j)
        for (Index k = 0; k < n; ++k)
          for (Index l = 0; l < n; ++l)
            for (Index v = 0; v < m.dim; v += (m.dim > 8 ? 3 : 1))
              CHECK(xm.action.column(x.index(i, j, k, l) * m.dim + v) == literal_action(m, i, j, k, l, v));
  }
}

TEST_CASE("bimodule to X-module and back") {
  for (const auto& m : corpus()) {
    CAPTURE(m.name);
    XAlgebra x(m.algebra);
    auto xm = bimodule_to_xmodule(m, x);
    CHECK(verify_xmodule(x, xm, 3, 300).empty());
    auto back = xmodule_to_bimodule(xm, x);
    CHECK(back.act_left == m.act_left);
    CHECK(back.act_right == m.act_right);
    CHECK(back.coact_left == m.coact_left);
    CHECK(back.coact_right == m.coact_right);
  }
}

TEST_CASE("counit elements act by multiplication") {
  auto m = regular_bimodule(h4(5));
  XAlgebra x(m.algebra);
  auto xm = bimodule_to_xmodule(m, x);
  auto eps = x.counit_vector(), one = x.unit_vector();
  for (Index a = 0; a < 4; ++a)
    for (Index v = 0; v < 4; ++v) {
      SparseVec ea{{a, 1}}, ev{{v, 1}};
      CHECK(act(x, xm, x.element(eps, eps, ea, one), ev) == multiply(*m.algebra, ea, ev));
      CHECK(act(x, xm, x.element(eps, eps, one, ea), ev) == multiply(*m.algebra, ev, ea));
    }
}

TEST_CASE("X as a Hopf bimodule") {
  XAlgebra x(kz2(2));
  auto xm = x_regular_module(x);
  CHECK(verify_xmodule(x, xm).empty());
  auto b = x_as_bimodule(x);
  CHECK(b.dim == 16);
  CHECK(verify_hopf_bimodule(b).empty());
  CHECK(coinvariants(b).dim() == 8);
}

TEST_CASE("non-module input is rejected") {
  XAlgebra x(kz2(2));
  XModule bogus{2, SparseMatrix::zero(PrimeField(2), 2, 32)};
  CHECK_FALSE(verify_xmodule(x, bogus).empty());
  CHECK_THROWS_AS(xmodule_to_bimodule(bogus, x), Error);
}
