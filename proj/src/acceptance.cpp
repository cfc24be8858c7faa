#include "hopfcoh/acceptance.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>
#include <thread>

#include "hopfcoh/parallel.hpp"

namespace hopfcoh {

namespace {

struct Outcome {
  bool passed = true;
  std::vector<std::string> notes;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      if (failures.size() < 6) failures.push_back(what);
    }
  }
  void note(const std::string& s) { notes.push_back(s); }
};

AlgebraPtr alg(HopfAlgebra h) { return std::make_shared<const HopfAlgebra>(std::move(h)); }
AlgebraPtr kz2(std::uint32_t p) { return alg(cyclic_group_algebra(2, PrimeField(p))); }
AlgebraPtr h4(std::uint32_t p) { return alg(sweedler_h4(PrimeField(p))); }

std::string list(const std::vector<Index>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

std::mt19937_64 stream(std::uint64_t seed, int id) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(id)};
  return std::mt19937_64(seq);
}

std::vector<HopfBimodule> bimodule_corpus() {
  std::vector<HopfBimodule> out;
  for (auto h : {kz2(2), kz2(3), h4(5), alg(symmetric_group_s3(PrimeField(7)))}) {
    auto r = regular_bimodule(h);
    out.push_back(r);
    out.push_back(right_tensor_power(r, 1));
    out.push_back(left_tensor_power(r, 1));
    out.push_back(direct_sum(r, right_tensor_power(r, 1)));
    out.push_back(codiagonal_tensor(r, r));
    out.push_back(diagonal_tensor(r, r));
  }
  auto a2 = regular_bimodule(kz2(2));
  out.push_back(bar_term(a2, 1));
  out.push_back(cobar_term(a2, 1));
  out.push_back(bar_term(regular_bimodule(h4(5)), 0));
  out.push_back(cobar_term(regular_bimodule(h4(5)), 0));
  out.push_back(x_as_bimodule(XAlgebra(a2.algebra)));
  return out;
}

// Z/2 with trivial coefficients through the periodic resolution ⋯ → kG →(1+g) kG →(1−g) kG → k:
// Hom_G(kG, k) = k and the induced maps are ε(1−g), ε(1+g) alternately.
std::vector<Index> z2_group_cohomology(const HopfAlgebra& kg, int n_max) {
  const PrimeField f = kg.field();
  const Elem minus = f.sub(kg.counit()[0], kg.counit()[1]);
  const Elem plus = f.add(kg.counit()[0], kg.counit()[1]);
  CochainComplex c{f, 0, {}, {}};
  for (int n = 0; n <= n_max + 1; ++n) c.dims.push_back(1);
  for (int n = 0; n <= n_max; ++n) {
    std::vector<SparseMatrix::Triplet> t{{0, 0, n % 2 == 0 ? minus : plus}};
    c.d.push_back(SparseMatrix::from_triplets(f, 1, 1, t));
  }
  return cohomology_dims(c, n_max);
}

Outcome axioms() {
  Outcome o;
  const PrimeField f2(2), f3(3), f5(5), f7(7);
  std::vector<std::pair<std::string, HopfAlgebra>> algebras{
      {"kZ2/F2", cyclic_group_algebra(2, f2)},        {"kZ2/F3", cyclic_group_algebra(2, f3)},
      {"kZ3/F2", cyclic_group_algebra(3, f2)},        {"S3/F7", symmetric_group_s3(f7)},
      {"dual kZ2/F2", dual(cyclic_group_algebra(2, f2))}, {"dual kZ2/F3", dual(cyclic_group_algebra(2, f3))},
      {"sweedler/F5", sweedler_h4(f5)},               {"taft(3,2)/F7", taft(3, f7, 2)}};
  for (const auto& [name, h] : algebras) {
    auto v = verify_hopf(h);
    o.expect(v.empty(), name + ": " + (v.empty() ? "" : v[0]));
  }
  auto corpus = bimodule_corpus();
  for (auto h : {alg(taft(3, f7, 2)), alg(dual(cyclic_group_algebra(2, f3))), alg(cyclic_group_algebra(3, f2))}) {
    corpus.push_back(regular_bimodule(h));
    corpus.push_back(right_tensor_power(regular_bimodule(h), 1));
  }
  std::size_t bad = 0;
  for (const auto& m : corpus) {
    auto v = verify_hopf_bimodule(m);
    if (!v.empty()) ++bad;
    o.expect(v.empty(), m.name + ": " + (v.empty() ? "" : v[0]));
  }
  o.note(std::to_string(algebras.size()) + " algebras, " + std::to_string(corpus.size()) + " bimodules, " +
         std::to_string(bad) + " failing");
  return o;
}

Outcome x_associativity(std::uint64_t seed) {
  Outcome o;
  for (std::uint32_t p : {2u, 3u}) {
    XAlgebra x(kz2(p));
    auto v = verify_x_associativity(x, -1);
    o.expect(v.empty(), "kZ2/F" + std::to_string(p) + ": " + (v.empty() ? "" : v[0]));
  }
  XAlgebra x4(h4(5));
  auto v = verify_x_associativity(x4, 1000, seed);
  o.expect(v.empty(), "H4/F5: " + (v.empty() ? "" : v[0]));
  o.note("exhaustive 16^3 triples over F2 and F3, 1000 sampled triples for H4/F5, unit checked");
  return o;
}

Outcome round_trip(std::uint64_t seed) {
  Outcome o;
  auto corpus = bimodule_corpus();
  for (const auto& m : corpus) {
    XAlgebra x(m.algebra);
    auto xm = bimodule_to_xmodule(m, x);
    auto v = verify_xmodule(x, xm, seed, 200);
    o.expect(v.empty(), m.name + " X-module: " + (v.empty() ? "" : v[0]));
    auto back = xmodule_to_bimodule(xm, x);
    o.expect(back.act_left == m.act_left && back.act_right == m.act_right && back.coact_left == m.coact_left &&
                 back.coact_right == m.coact_right,
             m.name + " structure changed");
  }
  o.note(std::to_string(corpus.size()) + " bimodules round-tripped");
  return o;
}

Outcome resolutions() {
  Outcome o;
  for (std::uint32_t p : {2u, 3u}) {
    auto m = regular_bimodule(kz2(p));
    const PrimeField f = m.field();
    const std::string at = "F" + std::to_string(p) + " ";
    auto bar = bar_complex(m, 3);
    o.expect(bar.d[0] * bar.h[0] == SparseMatrix::identity(f, m.dim), at + "bar homotopy at -1");
    for (int q = 0; q <= 2; ++q) {
      if (q >= 1) o.expect((bar.d[q - 1] * bar.d[q]).is_zero(), at + "bar d∘d at " + std::to_string(q));
      SparseMatrix lhs = bar.d[q + 1] * bar.h[q + 1] + bar.h[q] * bar.d[q];
      o.expect(lhs == SparseMatrix::identity(f, bar.terms[q].dim), at + "bar homotopy at " + std::to_string(q));
    }
    auto cob = cobar_complex(m, 3);
    o.expect((cob.d[0] * cob.coaugmentation).is_zero(), at + "cobar d∘coaugmentation");
    o.expect(cob.h[0] * cob.coaugmentation == SparseMatrix::identity(f, m.dim), at + "cobar homotopy at -1");
    for (int q = 0; q <= 2; ++q) {
      if (q >= 1) o.expect((cob.d[q] * cob.d[q - 1]).is_zero(), at + "cobar d∘d at " + std::to_string(q));
      SparseMatrix before = q == 0 ? cob.coaugmentation * cob.h[0] : cob.d[q - 1] * cob.h[q];
      o.expect(before + cob.h[q + 1] * cob.d[q] == SparseMatrix::identity(f, cob.terms[q].dim),
               at + "cobar homotopy at " + std::to_string(q));
    }
  }
  o.note("kZ2 over F2 and F3, degrees 0..2");
  return o;
}

std::vector<Index> dims_of(Outcome& o, Engine e, const HopfBimodule& m, const HopfBimodule& n, int n_max) {
  auto r = compute_cohomology(e, m, n, n_max);
  o.expect(r.violations.empty(), engine_name(e) + ": " + (r.violations.empty() ? "" : r.violations[0]));
  return r.dims;
}

Outcome tri_engine() {
  Outcome o;
  for (std::uint32_t p : {2u, 3u}) {
    auto a = regular_bimodule(kz2(p));
    const std::vector<Index> expect = p == 2 ? std::vector<Index>{1, 1, 1} : std::vector<Index>{1, 0, 0};
    auto oracle = z2_group_cohomology(*a.algebra, 3);
    o.expect(std::vector<Index>(oracle.begin(), oracle.begin() + 3) == expect, "group cohomology oracle");
    std::string line = "F" + std::to_string(p) + ":";
    for (Engine e : {Engine::GS, Engine::GSReduced, Engine::A4, Engine::A4Unreduced, Engine::ExtX}) {
      const int top = e == Engine::ExtX ? 2 : 3;
      auto d = dims_of(o, e, a, a, top);
      o.expect(std::vector<Index>(d.begin(), d.begin() + 3) == expect, engine_name(e) + " degrees 0..2");
      if (top == 3) o.expect(d[3] == oracle[3], engine_name(e) + " degree 3");
      line += " " + engine_name(e) + "=" + list(d);
    }
    o.note(line);
  }
  return o;
}

Outcome h4_agreement() {
  Outcome o;
  auto a = regular_bimodule(h4(5));
  auto gs = dims_of(o, Engine::GSReduced, a, a, 2);
  auto a4 = dims_of(o, Engine::A4, a, a, 2);
  o.expect(gs == a4, "gs-reduced " + list(gs) + " vs a4 " + list(a4));
  o.note("gs-reduced=" + list(gs) + " a4=" + list(a4) + ", D^2=0 in both");
  return o;
}

Outcome degree_zero() {
  Outcome o;
  std::size_t pairs = 0, runs = 0, guarded = 0;
  for (auto h : {kz2(2), kz2(3), h4(5)}) {
    auto a = regular_bimodule(h);
    std::vector<HopfBimodule> corpus{a, right_tensor_power(a, 1), left_tensor_power(a, 1)};
    if (h->dim() == 2) corpus.push_back(direct_sum(a, a));
    for (const auto& m : corpus)
      for (const auto& n : corpus) {
        ++pairs;
        const Index hom = constrained_hom_basis(m, n, kHopfBimodule).dim();
        std::vector<Engine> engines{Engine::GS, Engine::GSReduced, Engine::A4, Engine::A4Unreduced};
        if (h->dim() == 2) engines.push_back(Engine::ExtX);
        if (m.dim == h->dim() && n.dim == h->dim()) engines.push_back(Engine::HB);
        for (Engine e : engines) {
          try {
            auto d = dims_of(o, e, m, n, 0);
            ++runs;
            o.expect(d[0] == hom, engine_name(e) + " on " + m.name + ", " + n.name);
          } catch (const ResourceGuardError&) {
            ++guarded;
          }
        }
      }
  }
  o.note(std::to_string(pairs) + " pairs, " + std::to_string(runs) + " engine runs, " + std::to_string(guarded) +
         " stopped by the memory guard");
  return o;
}

Outcome projective() {
  Outcome o;
  XAlgebra x(kz2(2));
  auto a = regular_bimodule(x.base());
  std::string line;
  for (Engine e : {Engine::GS, Engine::GSReduced, Engine::A4}) {
    auto r = projective_vanishing_check(x, a, 2, e);
    o.expect(r.vanishes && r.dims.size() == 3 && r.dims[1] == 0 && r.dims[2] == 0, engine_name(e));
    line += (line.empty() ? "" : " ") + engine_name(e) + "=" + list(r.dims);
  }
  o.note(line);
  return o;
}

Outcome additivity() {
  Outcome o;
  auto a = regular_bimodule(kz2(2));
  auto aa = direct_sum(a, a);
  for (const auto& m : {a, right_tensor_power(a, 1)})
    for (Engine e : {Engine::GSReduced, Engine::A4, Engine::ExtX}) {
      auto one = dims_of(o, e, m, a, 2), two = dims_of(o, e, m, aa, 2);
      for (std::size_t k = 0; k < one.size(); ++k)
        o.expect(two[k] == 2 * one[k], engine_name(e) + " degree " + std::to_string(k));
    }
  o.note("M in {A, A⊗A}, engines gs-reduced, a4, ext-x, degrees 0..2");
  return o;
}

A4Cochain random_cocycle(const std::vector<A4Cochain>& basis, const A4Cochain& zero, std::mt19937_64& rng) {
  A4Cochain c = zero;
  const std::uint32_t p = zero.src.field().p();
  for (const auto& b : basis) c = c + scale(static_cast<Elem>(rng() % p), b);
  return c;
}

Outcome cup_calculus(std::mt19937_64 rng) {
  Outcome o;
  auto a = regular_bimodule(kz2(2));
  int derivations = 0;
  for (int k = 0; k < 100; ++k) {
    const int p = static_cast<int>(rng() % 3), q = static_cast<int>(rng() % 3);
    auto f = random_cochain(a, a, p, rng);
    auto g = random_cochain(a, a, q, rng);
    bool ok = cup_is_derivation_check(f, g);
    derivations += ok;
    o.expect(ok, "derivation law, pair " + std::to_string(k));
  }
  A4CochainSpace z0(a, a, 0), z1(a, a, 1);
  auto maps = z0.cocycle_basis();
  auto cocycles = z1.cocycle_basis();
  int assoc = 0;
  for (int k = 0; k < 50; ++k) {
    auto h0 = random_cocycle(maps, zero_cochain(a, a, 0), rng);
    auto f = random_cocycle(cocycles, zero_cochain(a, a, 1), rng);
    auto g = random_cocycle(cocycles, zero_cochain(a, a, 1), rng);
    bool ok = partial_assoc_check(f, g, h0);
    assoc += ok;
    o.expect(ok, "partial associativity, triple " + std::to_string(k));
  }
  int hb = 0;
  const PrimeField fld = a.field();
  auto random_hb = [&](int degree) {
    HbCochain c{a.algebra, degree, {}};
    for (int t = 0; t <= degree; ++t) {
      const Index r = checked_power(2, t), cols = checked_power(2, degree - t);
      std::vector<SparseMatrix::Triplet> tr;
      for (Index i = 0; i < r; ++i)
        for (Index j = 0; j < cols; ++j) tr.push_back({i, j, static_cast<Elem>(rng() % 2)});
      c.components.push_back(SparseMatrix::from_triplets(fld, r, cols, tr));
    }
    return c;
  };
  for (int k = 0; k < 50; ++k) {
    const int p = static_cast<int>(rng() % 3), q = static_cast<int>(rng() % (3 - p));
    auto f = random_hb(p), g = random_hb(q);
    bool ok = hb_to_a4(hb_cup(f, g)) == cup(hb_to_a4(f), hb_to_a4(g));
    hb += ok;
    o.expect(ok, "hb_cup agreement, pair " + std::to_string(k));
  }
  o.note("derivation " + std::to_string(derivations) + "/100, associativity " + std::to_string(assoc) +
         "/50, hb_cup " + std::to_string(hb) + "/50");
  return o;
}

Outcome extensions(std::mt19937_64 rng) {
  Outcome o;
  auto a = regular_bimodule(kz2(2));
  std::size_t cocycles = 0;
  for (const auto& m : {a, right_tensor_power(a, 1)}) {
    A4CochainSpace c1(m, a, 1);
    auto split = extension_from_1cocycle(zero_cochain(m, a, 1));
    for (const auto& f : c1.cocycle_basis()) {
      ++cocycles;
      auto e = build_extension(f);
      o.expect(verify_extension(e).empty(), "basis cocycle rejected");
      auto moved = extension_from_1cocycle(f + coboundary(random_cochain(m, a, 0, rng)));
      o.expect(extensions_equivalent(e, moved), "cohomologous cocycles inequivalent");
      o.expect(extensions_equivalent(split, e) == c1.is_coboundary(f), "split test disagrees with cohomology");
    }
  }
  int rejected = 0, tries = 0;
  while (rejected < 20 && tries < 1000) {
    ++tries;
    auto f = random_cochain(a, a, 1, rng);
    if (is_cocycle(f)) continue;
    ++rejected;
    o.expect(!verify_extension(build_extension(f)).empty(), "non-cocycle accepted");
  }
  o.expect(rejected == 20, "could not draw 20 non-cocycles");
  A4CochainSpace c1(a, a, 1);
  auto h1 = c1.cohomology_basis();
  o.expect(h1.size() == 1, "dim H^1 = " + std::to_string(h1.size()));
  if (!h1.empty())
    o.expect(!extensions_equivalent(extension_from_1cocycle(zero_cochain(a, a, 1)), extension_from_1cocycle(h1[0])),
             "non-split witness is split");
  o.note(std::to_string(cocycles) + " basis cocycles valid, " + std::to_string(rejected) +
         " non-cocycles rejected, witness non-split");
  return o;
}

Outcome yoneda() {
  Outcome o;
  auto a = regular_bimodule(kz2(2));
  A4CochainSpace c1(a, a, 1), c0(a, a, 0);
  int pairs = 0;
  for (const auto& f : c1.cocycle_basis())
    for (const auto& g : c0.cocycle_basis()) {
      ++pairs;
      o.expect(yoneda_degree10_check(f, g), "pair " + std::to_string(pairs));
    }
  o.expect(pairs > 0, "no basis pairs");
  o.note(std::to_string(pairs) + " basis pairs");
  return o;
}

Outcome nontrivial_product() {
  Outcome o;
  auto a = regular_bimodule(kz2(2));
  A4CochainSpace c1(a, a, 1), c2(a, a, 2);
  auto h1 = c1.cohomology_basis();
  o.expect(h1.size() == 1, "dim H^1_b = " + std::to_string(h1.size()));
  if (h1.empty()) return o;
  HbCochain gen = a4_to_hb(h1[0]);
  A4Cochain sq = hb_to_a4(hb_cup(gen, gen));
  o.expect(is_cocycle(sq), "square is not a cocycle");
  o.expect(!c2.is_coboundary(sq), "square is a coboundary");
  o.note("generator squared is a cocycle outside the image of D");
  return o;
}

CriterionResult run_one(int id, const std::string& name, const std::function<Outcome()>& fn) {
  CriterionResult r{id, name, false, {}, 0};
  const auto t0 = std::chrono::steady_clock::now();
  try {
    Outcome o = fn();
    r.passed = o.passed;
    std::string d;
    for (const auto& n : o.notes) d += (d.empty() ? "" : "; ") + n;
    for (const auto& f : o.failures) d += (d.empty() ? "" : "; ") + std::string("FAILED ") + f;
    r.detail = d;
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("error: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace

std::vector<CriterionResult> run_acceptance_core(std::uint64_t seed) {
  std::vector<CriterionResult> out;
  out.push_back(run_one(1, "axiom suites", axioms));
  out.push_back(run_one(2, "X associativity", [&] { return x_associativity(seed); }));
  out.push_back(run_one(3, "correspondence round trip", [&] { return round_trip(seed); }));
  out.push_back(run_one(4, "resolution identities", resolutions));
  out.push_back(run_one(5, "tri-engine agreement", tri_engine));
  out.push_back(run_one(6, "H4 bi-engine agreement", h4_agreement));
  out.push_back(run_one(7, "degree-0 law", degree_zero));
  out.push_back(run_one(8, "projective vanishing", projective));
  out.push_back(run_one(9, "additivity", additivity));
  out.push_back(run_one(10, "cup calculus", [&] { return cup_calculus(stream(seed, 10)); }));
  out.push_back(run_one(11, "extension calculus", [&] { return extensions(stream(seed, 11)); }));
  out.push_back(run_one(12, "Yoneda base case", yoneda));
  out.push_back(run_one(13, "nontrivial product", nontrivial_product));
  return out;
}

std::vector<CriterionResult> run_acceptance(std::uint64_t seed) {
  const unsigned saved = jobs();
  set_jobs(1);
  auto first = run_acceptance_core(seed);
  const unsigned many = std::max(4u, std::thread::hardware_concurrency());
  set_jobs(many);
  std::vector<CriterionResult> second;
  auto last = run_one(14, "determinism", [&] {
    Outcome o;
    second = run_acceptance_core(seed);
    const std::string a = format_acceptance(first, false), b = format_acceptance(second, false);
    o.expect(a == b, "reports differ between 1 and " + std::to_string(many) + " workers");
    o.note("reports byte-identical at 1 and " + std::to_string(many) + " workers (" + std::to_string(a.size()) +
           " bytes)");
    return o;
  });
  set_jobs(saved);
  first.push_back(last);
  return first;
}

std::string format_acceptance(const std::vector<CriterionResult>& results, bool timings) {
  std::ostringstream os;
  for (const auto& r : results) {
    os << (r.passed ? "PASS" : "FAIL") << "  " << (r.id < 10 ? " " : "") << r.id << "  " << r.name << ": "
       << r.detail;
    if (timings) {
      std::ostringstream t;
      t.precision(3);
      t << std::fixed << r.seconds;
      os << " [" << t.str() << " s]";
    }
    os << '\n';
  }
  return os.str();
}

Json acceptance_to_json(const std::vector<CriterionResult>& results, bool timings) {
  Json arr = Json::array();
  for (const auto& r : results) {
    Json j{{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}};
    if (timings) j["seconds"] = r.seconds;
    arr.push_back(j);
  }
  return arr;
}

}  // namespace hopfcoh
