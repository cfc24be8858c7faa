#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfcoh/bimodule.hpp"

using namespace hopfcoh;

namespace {

AlgebraPtr kz2(std::uint32_t p) { return std::make_shared<HopfAlgebra>(cyclic_group_algebra(2, PrimeField(p))); }
AlgebraPtr h4(std::uint32_t p) { return std::make_shared<HopfAlgebra>(sweedler_h4(PrimeField(p))); }

std::vector<HopfBimodule> corpus() {
  std::vector<HopfBimodule> out;
  for (auto h : {kz2(2), kz2(3), h4(5), h4(3), std::make_shared<const HopfAlgebra>(symmetric_group_s3(PrimeField(7)))}) {
    auto r = regular_bimodule(h);
    out.push_back(r);
    out.push_back(right_tensor_power(r, 1));
    out.push_back(left_tensor_power(r, 1));
    out.push_back(direct_sum(r, right_tensor_power(r, 1)));
  }
  out.push_back(bar_term(regular_bimodule(kz2(2)), 1));
  out.push_back(cobar_term(regular_bimodule(kz2(3)), 1));
  out.push_back(bar_term(regular_bimodule(h4(5)), 0));
  out.push_back(cobar_term(regular_bimodule(h4(3)), 0));
  return out;
}

}  // namespace

TEST_CASE("regular bimodules verify") {
  CHECK(verify_hopf_bimodule(regular_bimodule(kz2(2))).empty());
  CHECK(verify_hopf_bimodule(regular_bimodule(h4(5))).empty());
  auto r = regular_bimodule(kz2(2));
  CHECK(r.dim == 2);
  CHECK(r.coact_left == r.algebra->comul());
}

TEST_CASE("broken coaction is reported") {
  auto r = regular_bimodule(kz2(2));
  r.coact_left = SparseMatrix::zero(r.field(), 4, 2);
  auto report = verify_hopf_bimodule(r);
  CHECK(std::find(report.begin(), report.end(), "left comodule counit") != report.end());
}

TEST_CASE("corpus members are Hopf bimodules, free over their coinvariants") {
  for (const auto& m : corpus()) {
    CAPTURE(m.name);
    CHECK(verify_hopf_bimodule(m).empty());
    CHECK(coinvariants(m).dim() * m.algebra->dim() == m.dim);
    auto iso = freeness_iso(m);
    CHECK(iso.rows() == m.dim);
    CHECK(rank(iso) == m.dim);
  }
}

TEST_CASE("coinvariants of a group algebra") {
  for (auto h : {kz2(2), std::make_shared<const HopfAlgebra>(symmetric_group_s3(PrimeField(7)))}) {
    auto c = coinvariants(regular_bimodule(h));
    REQUIRE(c.dim() == 1);
    CHECK(c.vectors[0] == SparseVec{{0, 1}});
  }
  auto iso = freeness_iso(regular_bimodule(kz2(2)));
  CHECK(iso == SparseMatrix::identity(PrimeField(2), 2));
  auto b1 = bar_term(regular_bimodule(kz2(2)), 1);
  CHECK(b1.dim == 32);
  CHECK(freeness_iso(b1).cols() == 32);
}

TEST_CASE("tensor powers") {
  auto r = regular_bimodule(kz2(2));
  auto r0 = right_tensor_power(r, 0);
  CHECK(r0.act_left == r.act_left);
  CHECK(r0.coact_right == r.coact_right);
  CHECK(left_tensor_power(r, 0).act_left == r.act_left);
  auto r1 = right_tensor_power(r, 1);
  CHECK(r1.dim == 4);
  // left action touches only the M factor: g·(g⊗1) = 1⊗1
  CHECK(r1.act_left.column(1 * 4 + 2) == SparseVec{{0, 1}});
  // codiagonal: δ_L(g⊗g) = 1⊗(g⊗g)
  CHECK(r1.coact_left.column(3) == SparseVec{{3, 1}});
  auto l1 = left_tensor_power(r, 1);
  // standard coaction reads the first tensorand: δ_L(g⊗1) = g⊗(g⊗1)
  CHECK(l1.coact_left.column(2) == SparseVec{{1 * 4 + 2, 1}});
  // diagonal action: g·(1⊗1) = g⊗g
  CHECK(l1.act_left.column(1 * 4 + 0) == SparseVec{{3, 1}});
}

TEST_CASE("sweedler tensor coaction follows the Sweedler legs") {
  auto h = h4(5);
  auto r1 = right_tensor_power(regular_bimodule(h), 1);
  // δ_L(1⊗x) = 1·x⁽¹⁾ ⊗ 1 ⊗ x⁽²⁾ = x⊗(1⊗1) + g⊗(1⊗x)
  SparseVec expect{{2 * 16 + 0, 1}, {1 * 16 + 2, 1}};
  std::sort(expect.begin(), expect.end(), [](auto& a, auto& b) { return a.index < b.index; });
  CHECK(r1.coact_left.column(2) == expect);
}

TEST_CASE("bar complex identities") {
  for (auto h : {kz2(2), kz2(3), h4(5), h4(3)}) {
    auto m = regular_bimodule(h);
    int q_max = h->dim() == 2 ? 2 : 1;
    auto bar = bar_complex(m, q_max);
    const PrimeField f = m.field();
    for (int q = 1; q <= q_max; ++q) CHECK((bar.d[q - 1] * bar.d[q]).is_zero());
    for (int q = 0; q <= q_max; ++q) {
      const HopfBimodule& target = q == 0 ? m : bar.terms[q - 1];
      CHECK(is_hopf_morphism(bar.d[q], bar.terms[q], target));
    }
    // ∂_{q+1} h_q + h_{q−1} ∂_q = id
    CHECK(bar.d[0] * bar.h[0] == SparseMatrix::identity(f, m.dim));
    for (int q = 0; q < q_max; ++q) {
      SparseMatrix lhs = bar.d[q + 1] * bar.h[q + 1];
      if (q > 0) lhs = lhs + bar.h[q] * bar.d[q];
      else lhs = lhs + bar.h[0] * bar.d[0];
      CHECK(lhs == SparseMatrix::identity(f, bar.terms[q].dim));
      const HopfBimodule& src = bar.terms[q];
      CHECK(is_bicomodule_morphism(bar.h[q + 1], src, bar.terms[q + 1]));
    }
    CHECK(is_bicomodule_morphism(bar.h[0], m, bar.terms[0]));
  }
  auto m = regular_bimodule(kz2(2));
  CHECK_FALSE(is_left_module_morphism(bar_homotopy(m, 0), bar_term(m, 0), bar_term(m, 1)));
}

TEST_CASE("cobar complex identities") {
  for (auto h : {kz2(2), kz2(3), h4(5), h4(3)}) {
    auto n = regular_bimodule(h);
    int p_max = h->dim() == 2 ? 2 : 1;
    auto cob = cobar_complex(n, p_max);
    const PrimeField f = n.field();
    CHECK((cob.d[0] * cob.coaugmentation).is_zero());
    for (int p = 1; p < p_max; ++p) CHECK((cob.d[p] * cob.d[p - 1]).is_zero());
    CHECK(is_hopf_morphism(cob.coaugmentation, n, cob.terms[0]));
    for (int p = 0; p < p_max; ++p) CHECK(is_hopf_morphism(cob.d[p], cob.terms[p], cob.terms[p + 1]));
    // h⁰ ∂^{−1} = id on N
    CHECK(cob.h[0] * cob.coaugmentation == SparseMatrix::identity(f, n.dim));
    for (int p = 0; p < p_max; ++p) {
      SparseMatrix before = p == 0 ? cob.coaugmentation * cob.h[0] : cob.d[p - 1] * cob.h[p];
      CHECK(before + cob.h[p + 1] * cob.d[p] == SparseMatrix::identity(f, cob.terms[p].dim));
    }
    CHECK(is_bimodule_morphism(cob.h[0], cob.terms[0], n));
    for (int p = 1; p <= p_max; ++p) CHECK(is_bimodule_morphism(cob.h[p], cob.terms[p], cob.terms[p - 1]));
  }
  auto n = regular_bimodule(kz2(2));
  CHECK_FALSE(is_left_comodule_morphism(cobar_homotopy(n, 1), cobar_term(n, 1), cobar_term(n, 0)));
}

TEST_CASE("memory guard on resolution terms") {
  Index saved = memory_guard();
  set_memory_guard(1000);
  CHECK_THROWS_AS(bar_term(regular_bimodule(h4(5)), 2), ResourceGuardError);
  set_memory_guard(saved);
}
