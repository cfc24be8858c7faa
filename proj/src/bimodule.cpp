#include "hopfcoh/bimodule.hpp"

namespace hopfcoh {

namespace {

SparseMatrix identity(PrimeField f, Index n) { return SparseMatrix::identity(f, n); }

// P(d0,d1,d2,d3) swapping the middle two factors.
SparseMatrix middle_swap(PrimeField f, Index d0, Index d1, Index d2, Index d3) {
  const Index dims[4] = {d0, d1, d2, d3};
  const std::size_t perm[4] = {0, 2, 1, 3};
  return tensor_permutation(f, dims, perm);
}

SparseMatrix kron_all(std::initializer_list<SparseMatrix> ms) {
  std::vector<SparseMatrix> v(ms);
  return kron(std::span<const SparseMatrix>(v));
}

void require_same_algebra(const HopfBimodule& v, const HopfBimodule& w) {
  if (v.algebra != w.algebra && !(v.algebra && w.algebra && v.algebra->mul() == w.algebra->mul() &&
                                   v.algebra->comul() == w.algebra->comul()))
    throw Error("bimodules over different algebras");
}

}  // namespace

void HopfBimodule::check_shapes() const {
  if (!algebra) throw Error("HopfBimodule: missing algebra");
  const Index n = algebra->dim(), m = dim;
  auto need = [&](const SparseMatrix& x, Index r, Index c, const char* what) {
    if (x.rows() != r || x.cols() != c)
      throw Error(std::string("HopfBimodule: ") + what + " has shape " + std::to_string(x.rows()) + "x" +
                  std::to_string(x.cols()) + ", expected " + std::to_string(r) + "x" + std::to_string(c));
  };
  need(act_left, m, n * m, "actL");
  need(act_right, m, m * n, "actR");
  need(coact_left, n * m, m, "coactL");
  need(coact_right, m * n, m, "coactR");
}

std::vector<std::string> verify_hopf_bimodule(const HopfBimodule& mod) {
  mod.check_shapes();
  const HopfAlgebra& h = *mod.algebra;
  const PrimeField f = h.field();
  const Index n = h.dim(), m = mod.dim;
  const auto& In = h.identity();
  const auto Im = identity(f, m);
  const auto& mu = h.mul();
  const auto& delta = h.comul();
  const auto& L = mod.act_left;
  const auto& R = mod.act_right;
  const auto& cL = mod.coact_left;
  const auto& cR = mod.coact_right;

  std::vector<std::string> bad;
  if (L * kron(mu, Im) != L * kron(In, L)) bad.push_back("left module associativity");
  if (L * kron(h.unit_map(), Im) != Im) bad.push_back("left module unit");
  if (R * kron(Im, mu) != R * kron(R, In)) bad.push_back("right module associativity");
  if (R * kron(Im, h.unit_map()) != Im) bad.push_back("right module unit");
  if (R * kron(L, In) != L * kron(In, R)) bad.push_back("bimodule");
  if (kron(delta, Im) * cL != kron(In, cL) * cL) bad.push_back("left comodule coassociativity");
  if (kron(h.counit_map(), Im) * cL != Im) bad.push_back("left comodule counit");
  if (kron(cR, In) * cR != kron(Im, delta) * cR) bad.push_back("right comodule coassociativity");
  if (kron(Im, h.counit_map()) * cR != Im) bad.push_back("right comodule counit");
  if (kron(cL, In) * cR != kron(In, cR) * cL) bad.push_back("bicomodule");
  if (cL * L != kron(mu, L) * middle_swap(f, n, n, n, m) * kron(delta, cL))
    bad.push_back("left coaction of left action");
  if (cL * R != kron(mu, R) * middle_swap(f, n, m, n, n) * kron(cL, delta))
    bad.push_back("left coaction of right action");
  if (cR * L != kron(L, mu) * middle_swap(f, n, n, m, n) * kron(delta, cR))
    bad.push_back("right coaction of left action");
  if (cR * R != kron(R, mu) * middle_swap(f, m, n, n, n) * kron(cR, delta))
    bad.push_back("right coaction of right action");
  return bad;
}

HopfBimodule regular_bimodule(AlgebraPtr h) {
  HopfBimodule m;
  m.dim = h->dim();
  m.act_left = h->mul();
  m.act_right = h->mul();
  m.coact_left = h->comul();
  m.coact_right = h->comul();
  m.name = "regular";
  m.algebra = std::move(h);
  return m;
}

HopfBimodule codiagonal_tensor(const HopfBimodule& v, const HopfBimodule& w) {
  require_same_algebra(v, w);
  const HopfAlgebra& h = *v.algebra;
  const PrimeField f = h.field();
  const Index n = h.dim();
  HopfBimodule out;
  out.algebra = v.algebra;
  out.dim = checked_product(v.dim, w.dim);
  const auto Iv = identity(f, v.dim), Iw = identity(f, w.dim);
  out.act_left = kron(v.act_left, Iw);
  out.act_right = kron(Iv, w.act_right);
  out.coact_left = kron_all({h.mul(), Iv, Iw}) * middle_swap(f, n, v.dim, n, w.dim) * kron(v.coact_left, w.coact_left);
  out.coact_right =
      kron_all({Iv, Iw, h.mul()}) * middle_swap(f, v.dim, n, w.dim, n) * kron(v.coact_right, w.coact_right);
  out.name = v.name + "*" + w.name;
  return out;
}

HopfBimodule diagonal_tensor(const HopfBimodule& v, const HopfBimodule& w) {
  require_same_algebra(v, w);
  const HopfAlgebra& h = *v.algebra;
  const PrimeField f = h.field();
  const Index n = h.dim();
  HopfBimodule out;
  out.algebra = v.algebra;
  out.dim = checked_product(v.dim, w.dim);
  const auto Iv = identity(f, v.dim), Iw = identity(f, w.dim);
  out.act_left = kron(v.act_left, w.act_left) * middle_swap(f, n, n, v.dim, w.dim) * kron_all({h.comul(), Iv, Iw});
  out.act_right = kron(v.act_right, w.act_right) * middle_swap(f, v.dim, w.dim, n, n) * kron_all({Iv, Iw, h.comul()});
  out.coact_left = kron(v.coact_left, Iw);
  out.coact_right = kron(Iv, w.coact_right);
  out.name = v.name + "." + w.name;
  return out;
}

HopfBimodule codiagonal_tensor(const std::vector<HopfBimodule>& factors) {
  if (factors.empty()) throw Error("codiagonal_tensor: no factors");
  HopfBimodule acc = factors[0];
  for (std::size_t i = 1; i < factors.size(); ++i) acc = codiagonal_tensor(acc, factors[i]);
  return acc;
}

HopfBimodule diagonal_tensor(const std::vector<HopfBimodule>& factors) {
  if (factors.empty()) throw Error("diagonal_tensor: no factors");
  HopfBimodule acc = factors[0];
  for (std::size_t i = 1; i < factors.size(); ++i) acc = diagonal_tensor(acc, factors[i]);
  return acc;
}

HopfBimodule right_tensor_power(const HopfBimodule& m, int k) {
  if (k < 0) throw Error("right_tensor_power: negative power");
  if (k == 0) return m;
  std::vector<HopfBimodule> fs{m};
  fs.insert(fs.end(), k, regular_bimodule(m.algebra));
  auto out = codiagonal_tensor(fs);
  out.name = m.name + "(x)A^" + std::to_string(k);
  return out;
}

HopfBimodule left_tensor_power(const HopfBimodule& n, int k) {
  if (k < 0) throw Error("left_tensor_power: negative power");
  if (k == 0) return n;
  std::vector<HopfBimodule> fs(k, regular_bimodule(n.algebra));
  fs.push_back(n);
  auto out = diagonal_tensor(fs);
  out.name = "A^" + std::to_string(k) + "(x)" + n.name;
  return out;
}

HopfBimodule direct_sum(const HopfBimodule& v, const HopfBimodule& w) {
  require_same_algebra(v, w);
  const PrimeField f = v.field();
  const Index n = v.algebra->dim();
  const Index dv = v.dim, dw = w.dim, D = dv + dw;
  auto remap = [](const SparseVec& x, auto&& index_map) {
    SparseVec y;
    y.reserve(x.size());
    for (const Entry& e : x) y.push_back({index_map(e.index), e.value});
    return y;
  };
  auto in_v = [](Index i) { return i; };
  auto in_w = [dv](Index i) { return i + dv; };
  std::vector<SparseVec> L(n * D), R(D * n), cL(D), cR(D);
  for (Index a = 0; a < n; ++a) {
    for (Index x = 0; x < dv; ++x) {
      L[a * D + x] = v.act_left.column(a * dv + x);
      R[x * n + a] = v.act_right.column(x * n + a);
    }
    for (Index x = 0; x < dw; ++x) {
      L[a * D + dv + x] = remap(w.act_left.column(a * dw + x), in_w);
      R[(dv + x) * n + a] = remap(w.act_right.column(x * n + a), in_w);
    }
  }
  for (Index x = 0; x < dv; ++x) {
    cL[x] = remap(v.coact_left.column(x), [&](Index i) { return (i / dv) * D + in_v(i % dv); });
    cR[x] = v.coact_right.column(x);
  }
  for (Index x = 0; x < dw; ++x) {
    cL[dv + x] = remap(w.coact_left.column(x), [&](Index i) { return (i / dw) * D + in_w(i % dw); });
    cR[dv + x] = remap(w.coact_right.column(x), [&](Index i) { return (dv + i / n) * n + i % n; });
  }
  HopfBimodule out;
  out.algebra = v.algebra;
  out.dim = D;
  out.act_left = SparseMatrix::from_columns(f, D, std::move(L));
  out.act_right = SparseMatrix::from_columns(f, D, std::move(R));
  out.coact_left = SparseMatrix::from_columns(f, n * D, std::move(cL));
  out.coact_right = SparseMatrix::from_columns(f, D * n, std::move(cR));
  out.name = v.name + "+" + w.name;
  return out;
}

SubspaceBasis coinvariants(const HopfBimodule& m) {
  const auto& h = *m.algebra;
  return kernel_basis(m.coact_right - kron(identity(m.field(), m.dim), h.unit_map()));
}

SparseMatrix freeness_iso(const HopfBimodule& m) {
  auto c = coinvariants(m);
  const auto& h = *m.algebra;
  SparseMatrix iso = m.act_left * kron(h.identity(), c.as_matrix(m.field()));
  if (iso.cols() != m.dim || rank(iso) != m.dim) throw Error("freeness failure");
  return iso;
}

bool is_left_module_morphism(const SparseMatrix& f, const HopfBimodule& v, const HopfBimodule& w) {
  return f * v.act_left == w.act_left * kron(v.algebra->identity(), f);
}
bool is_right_module_morphism(const SparseMatrix& f, const HopfBimodule& v, const HopfBimodule& w) {
  return f * v.act_right == w.act_right * kron(f, v.algebra->identity());
}
bool is_left_comodule_morphism(const SparseMatrix& f, const HopfBimodule& v, const HopfBimodule& w) {
  return kron(v.algebra->identity(), f) * v.coact_left == w.coact_left * f;
}
bool is_right_comodule_morphism(const SparseMatrix& f, const HopfBimodule& v, const HopfBimodule& w) {
  return kron(f, v.algebra->identity()) * v.coact_right == w.coact_right * f;
}
bool is_bimodule_morphism(const SparseMatrix& f, const HopfBimodule& v, const HopfBimodule& w) {
  return is_left_module_morphism(f, v, w) && is_right_module_morphism(f, v, w);
}
bool is_bicomodule_morphism(const SparseMatrix& f, const HopfBimodule& v, const HopfBimodule& w) {
  return is_left_comodule_morphism(f, v, w) && is_right_comodule_morphism(f, v, w);
}
bool is_hopf_morphism(const SparseMatrix& f, const HopfBimodule& v, const HopfBimodule& w) {
  return is_bimodule_morphism(f, v, w) && is_bicomodule_morphism(f, v, w);
}

Index resolution_term_dim(const HopfBimodule& m, int k) {
  if (k < 0) throw Error("resolution degree must be nonnegative");
  Index d = checked_product(checked_power(m.algebra->dim(), 2 * k + 2), m.dim);
  check_memory_guard(d, "resolution term of degree " + std::to_string(k) + " (dimension " + std::to_string(d) + ")");
  return d;
}

HopfBimodule bar_term(const HopfBimodule& m, int q) {
  resolution_term_dim(m, q);
  std::vector<HopfBimodule> fs(2 * q + 3, regular_bimodule(m.algebra));
  fs[q + 1] = m;
  auto out = codiagonal_tensor(fs);
  out.name = "B" + std::to_string(q) + "(" + m.name + ")";
  return out;
}

HopfBimodule cobar_term(const HopfBimodule& n, int p) {
  resolution_term_dim(n, p);
  std::vector<HopfBimodule> fs(2 * p + 3, regular_bimodule(n.algebra));
  fs[p + 1] = n;
  auto out = diagonal_tensor(fs);
  out.name = "C" + std::to_string(p) + "(" + n.name + ")";
  return out;
}

SparseMatrix bar_differential(const HopfBimodule& m, int q) {
  if (q < 0) throw Error("bar_differential: q must be nonnegative");
  const HopfAlgebra& h = *m.algebra;
  const PrimeField f = h.field();
  resolution_term_dim(m, q);
  const auto Im = identity(f, m.dim);
  SparseMatrix out = kron_all({tensor_identity(h, q), m.act_left * kron(h.identity(), m.act_right), tensor_identity(h, q)});
  if (q % 2 == 1) out = scale(f.neg(1), out);
  for (int i = 0; i < q; ++i) {
    SparseMatrix term = kron_all({tensor_identity(h, i), h.mul(), tensor_identity(h, q - 1 - i), Im,
                                  tensor_identity(h, q - 1 - i), h.mul(), tensor_identity(h, i)});
    out = i % 2 == 0 ? out + term : out - term;
  }
  return out;
}

SparseMatrix cobar_coaugmentation(const HopfBimodule& n) {
  return kron(n.coact_left, n.algebra->identity()) * n.coact_right;
}

SparseMatrix cobar_differential(const HopfBimodule& n, int p) {
  if (p < 0) throw Error("cobar_differential: p must be nonnegative");
  const HopfAlgebra& h = *n.algebra;
  const PrimeField f = h.field();
  resolution_term_dim(n, p + 1);
  const auto In = identity(f, n.dim);
  SparseMatrix out = kron_all({tensor_identity(h, p + 1), cobar_coaugmentation(n), tensor_identity(h, p + 1)});
  if ((p + 1) % 2 == 1) out = scale(f.neg(1), out);
  for (int i = 0; i <= p; ++i) {
    SparseMatrix term = kron_all({tensor_identity(h, i), h.comul(), tensor_identity(h, p - i), In,
                                  tensor_identity(h, p - i), h.comul(), tensor_identity(h, i)});
    out = i % 2 == 0 ? out + term : out - term;
  }
  return out;
}

SparseMatrix bar_homotopy(const HopfBimodule& m, int q) {
  if (q < -1) throw Error("bar_homotopy: q must be at least -1");
  resolution_term_dim(m, q + 1);
  const auto& h = *m.algebra;
  Index d = checked_product(checked_power(h.dim(), 2 * q + 2), m.dim);
  return kron_all({h.unit_map(), identity(m.field(), d), h.unit_map()});
}

SparseMatrix cobar_homotopy(const HopfBimodule& n, int p) {
  if (p < 0) throw Error("cobar_homotopy: p must be nonnegative");
  resolution_term_dim(n, p);
  const auto& h = *n.algebra;
  Index d = checked_product(checked_power(h.dim(), 2 * p), n.dim);
  return kron_all({h.counit_map(), identity(n.field(), d), h.counit_map()});
}

BarComplex bar_complex(const HopfBimodule& m, int q_max) {
  if (q_max < 0) throw Error("bar_complex: q_max must be nonnegative");
  BarComplex c;
  c.base = m;
  for (int q = 0; q <= q_max; ++q) {
    c.terms.push_back(bar_term(m, q));
    c.d.push_back(bar_differential(m, q));
  }
  for (int q = -1; q < q_max; ++q) c.h.push_back(bar_homotopy(m, q));
  return c;
}

CobarComplex cobar_complex(const HopfBimodule& n, int p_max) {
  if (p_max < 0) throw Error("cobar_complex: p_max must be nonnegative");
  CobarComplex c;
  c.base = n;
  c.coaugmentation = cobar_coaugmentation(n);
  for (int p = 0; p <= p_max; ++p) {
    c.terms.push_back(cobar_term(n, p));
    c.h.push_back(cobar_homotopy(n, p));
    if (p < p_max) c.d.push_back(cobar_differential(n, p));
  }
  return c;
}

}  // namespace hopfcoh
