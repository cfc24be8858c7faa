#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hopfcoh/parallel.hpp"
#include "hopfcoh/theories.hpp"

using namespace hopfcoh;

namespace {

AlgebraPtr kz2(std::uint32_t p) { return std::make_shared<HopfAlgebra>(cyclic_group_algebra(2, PrimeField(p))); }
AlgebraPtr h4(std::uint32_t p) { return std::make_shared<HopfAlgebra>(sweedler_h4(PrimeField(p))); }

SparseMatrix random_matrix(PrimeField f, Index r, Index c, std::mt19937_64& rng) {
  std::vector<SparseMatrix::Triplet> t;
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < c; ++j) t.push_back({i, j, static_cast<Elem>(rng() % f.p())});
  return SparseMatrix::from_triplets(f, r, c, t);
}

std::vector<Index> dims(Engine e, const HopfBimodule& m, const HopfBimodule& n, int n_max) {
  auto r = compute_cohomology(e, m, n, n_max);
  CHECK(r.violations.empty());
  return r.dims;
}

const Engine kAll[] = {Engine::GS, Engine::GSReduced, Engine::A4, Engine::A4Unreduced, Engine::ExtX};

}  // namespace

TEST_CASE("all engines agree on kZ/2 with M = N = A") {
  for (std::uint32_t p : {2u, 3u}) {
    CAPTURE(p);
    auto a = regular_bimodule(kz2(p));
    const std::vector<Index> expect = p == 2 ? std::vector<Index>{1, 1, 1, 1} : std::vector<Index>{1, 0, 0, 0};
    for (Engine e : {Engine::GS, Engine::GSReduced, Engine::A4, Engine::A4Unreduced, Engine::HB}) {
      CAPTURE(engine_name(e));
      CHECK(dims(e, a, a, 3) == expect);
    }
    CHECK(dims(Engine::ExtX, a, a, 2) == std::vector<Index>(expect.begin(), expect.begin() + 3));
    XAlgebra x(a.algebra);
    CHECK(ext_x_dims(a, a, x, 0) == std::vector<Index>{1});
  }
}

TEST_CASE("truncated bialgebra complex drops the first row and column") {
  auto g = hb_grid(kz2(2), 3, true);
  for (int k = 0; k <= 3; ++k) {
    CHECK(g.complex.dim(0, k) == 0);
    CHECK(g.complex.dim(k, 0) == 0);
  }
  CHECK(g.complex.dim(1, 1) == 4);
  CHECK(verify_double_complex(g.complex).empty());
}

TEST_CASE("degree 0 is Hom of Hopf bimodules") {
  for (auto h : {kz2(2), kz2(3), h4(5)}) {
    auto a = regular_bimodule(h);
    std::vector<HopfBimodule> corpus{a, right_tensor_power(a, 1), left_tensor_power(a, 1)};
    if (h->dim() == 2) corpus.push_back(direct_sum(a, a));
    for (const auto& m : corpus)
      for (const auto& n : corpus) {
        CAPTURE(m.name);
        CAPTURE(n.name);
        const Index hom = constrained_hom_basis(m, n, kHopfBimodule).dim();
        for (Engine e : kAll) {
          if (e == Engine::ExtX && h->dim() > 2) continue;
          if (e == Engine::GS && m.dim * n.dim > 16) continue;
          CAPTURE(engine_name(e));
          CHECK(dims(e, m, n, 0)[0] == hom);
        }
      }
  }
}

TEST_CASE("engines agree on non-regular pairs") {
  auto a = regular_bimodule(kz2(2));
  auto m = right_tensor_power(a, 1);
  auto ref = dims(Engine::A4, m, a, 2);
  for (Engine e : kAll) {
    CAPTURE(engine_name(e));
    CHECK(dims(e, m, a, 2) == ref);
  }
  ref = dims(Engine::A4, a, m, 2);
  for (Engine e : {Engine::GSReduced, Engine::A4Unreduced, Engine::ExtX}) CHECK(dims(e, a, m, 2) == ref);
}

TEST_CASE("H4 over F5: reduced GS and A4 agree") {
  auto a = regular_bimodule(h4(5));
  auto gs = compute_cohomology(Engine::GSReduced, a, a, 2);
  auto a4 = compute_cohomology(Engine::A4, a, a, 2);
  CHECK(gs.violations.empty());
  CHECK(a4.violations.empty());
  CHECK(gs.dims == a4.dims);
  CHECK(dims(Engine::HB, a, a, 2) == a4.dims);
  CHECK(gs.dims[0] == 1);
}

TEST_CASE("reduced GS differentials are the transported ones") {
  std::mt19937_64 rng(3);
  for (auto h : {kz2(3), h4(5)}) {
    auto a = regular_bimodule(h);
    const PrimeField f = h->field();
    std::vector<std::pair<HopfBimodule, HopfBimodule>> pairs{{a, a}};
    if (h->dim() == 2) pairs.push_back({right_tensor_power(a, 1), left_tensor_power(a, 1)});
    for (const auto& [m, n] : pairs)
      for (int p = 0; p <= 1; ++p)
        for (int q = 0; q + p <= 1; ++q) {
          CAPTURE(p);
          CAPTURE(q);
          auto s = gs_reduced_source(m, q);
          auto t = gs_reduced_target(n, p);
          auto dh = gs_reduced_horizontal(m, n, p, q);
          auto dc = gs_reduced_vertical(m, n, p, q);
          auto dc_printed = gs_reduced_vertical_printed(m, n, p, q);
          for (int k = 0; k < 3; ++k) {
            SparseMatrix beta = random_matrix(f, t.dim, s.dim, rng);
            SparseMatrix alpha = gs_extend(m, n, p, q, beta);
            CHECK(is_hopf_morphism(alpha, bar_term(m, q), cobar_term(n, p)));
            CHECK(gs_restrict(m, n, p, q, alpha) == beta);
            CHECK(dh.apply(beta) == gs_restrict(m, n, p, q + 1, alpha * bar_differential(m, q + 1)));
            CHECK(dc.apply(beta) == gs_restrict(m, n, p + 1, q, scale(f.sign(q), cobar_differential(n, p) * alpha)));
            CHECK(dc_printed.apply(beta) == dc.apply(beta));
          }
        }
  }
}

TEST_CASE("the bialgebra complex is the Hopf bimodule complex of A") {
  std::mt19937_64 rng(4);
  for (auto h : {kz2(3), h4(5)}) {
    auto a = regular_bimodule(h);
    const PrimeField f = h->field();
    const Index n = h->dim();
    for (int p = 0; p <= 2; ++p)
      for (int q = 0; q + p <= 2; ++q) {
        CAPTURE(p);
        CAPTURE(q);
        auto cell = constrained_hom_basis(a4_source(a, q), a4_target(a, p), kLeftModule | kRightComodule);
        CHECK(cell.dim() == checked_power(n, p + q));
        for (int k = 0; k < 3; ++k) {
          SparseMatrix beta = random_matrix(f, checked_power(n, p), checked_power(n, q), rng);
          SparseMatrix alpha = hb_to_a4(h, p, q, beta);
          CHECK(cell.contains(alpha));
          CHECK(a4_to_hb(h, p, q, alpha) == beta);
          CHECK(a4_horizontal(a, a, p, q).apply(alpha) == hb_to_a4(h, p, q + 1, hb_horizontal(*h, p, q).apply(beta)));
          CHECK(a4_vertical(a, a, p, q).apply(alpha) == hb_to_a4(h, p + 1, q, hb_vertical(*h, p, q).apply(beta)));
        }
      }
  }
}

TEST_CASE("additivity in the second argument") {
  auto a = regular_bimodule(kz2(2));
  auto aa = direct_sum(a, a);
  for (Engine e : kAll) {
    CAPTURE(engine_name(e));
    auto single = dims(e, a, a, 2);
    auto twice = dims(e, a, aa, 2);
    for (std::size_t k = 0; k < single.size(); ++k) CHECK(twice[k] == 2 * single[k]);
  }
}

TEST_CASE("projective bimodules have no higher cohomology") {
  XAlgebra x(kz2(2));
  auto a = regular_bimodule(x.base());
  for (Engine e : {Engine::GSReduced, Engine::A4}) {
    auto r = projective_vanishing_check(x, a, 2, e);
    CHECK(r.vanishes);
    CHECK(r.dims.size() == 3);
    CHECK(r.dims[1] == 0);
    CHECK(r.dims[2] == 0);
    CHECK(r.dims[0] == constrained_hom_basis(x_as_bimodule(x), a, kHopfBimodule).dim());
  }
}

TEST_CASE("guard errors name the cell") {
  auto a = regular_bimodule(kz2(2));
  Index old = memory_guard();
  set_memory_guard(200);
  try {
    gs_grid(a, a, 3, true);
    FAIL("expected a guard error");
  } catch (const ResourceGuardError& e) {
    CHECK(std::string(e.what()).find("cell (") != std::string::npos);
  }
  CHECK_THROWS_AS(ext_x_dims(a, a, XAlgebra(a.algebra), 2), ResourceGuardError);
  set_memory_guard(old);
}

TEST_CASE("results do not depend on the worker count") {
  auto a = regular_bimodule(kz2(3));
  set_jobs(1);
  auto one = gs_grid(a, a, 3, false).complex;
  set_jobs(4);
  auto four = gs_grid(a, a, 3, false).complex;
  set_jobs(0);
  CHECK(one.dims == four.dims);
  for (std::size_t c = 0; c < one.dh.size(); ++c) {
    CHECK(one.dh[c] == four.dh[c]);
    CHECK(one.dc[c] == four.dc[c]);
  }
}

TEST_CASE("engine names round trip") {
  for (Engine e : {Engine::GS, Engine::GSReduced, Engine::A4, Engine::A4Unreduced, Engine::HB, Engine::HBTruncated,
                   Engine::ExtX})
    CHECK(parse_engine(engine_name(e)) == e);
  CHECK_FALSE(parse_engine("nope").has_value());
}
