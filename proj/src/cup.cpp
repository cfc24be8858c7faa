#include "hopfcoh/cup.hpp"

#include <string>

namespace hopfcoh {

namespace {

SparseMatrix kr(PrimeField f, std::initializer_list<SparseMatrix> factors) {
  SparseMatrix r = SparseMatrix::identity(f, 1);
  for (const auto& m : factors) r = kron(r, m);
  return r;
}

bool same_bimodule(const HopfBimodule& a, const HopfBimodule& b) {
  return a.dim == b.dim && a.act_left == b.act_left && a.act_right == b.act_right &&
         a.coact_left == b.coact_left && a.coact_right == b.coact_right;
}

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  return a.get() == b.get() || (a->mul() == b->mul() && a->comul() == b->comul());
}

// A^k → A^k⊗A^k, a_1⊗…⊗a_k ↦ a^(1)_1⊗…⊗a^(1)_k ⊗ a^(2)_1⊗…⊗a^(2)_k
SparseMatrix split(const HopfAlgebra& h, int k) {
  const PrimeField f = h.field();
  SparseMatrix d = SparseMatrix::identity(f, 1);
  for (int i = 0; i < k; ++i) d = kron(d, h.comul());
  std::vector<Index> dims(2 * k, h.dim());
  std::vector<std::size_t> perm(2 * k);
  for (int i = 0; i < k; ++i) {
    perm[2 * i] = i;
    perm[2 * i + 1] = k + i;
  }
  return tensor_permutation(f, dims, perm) * d;
}

// A^s⊗A^s → A^s, factorwise product
SparseMatrix factorwise_product(const HopfAlgebra& h, int s) {
  const PrimeField f = h.field();
  std::vector<Index> dims(2 * s, h.dim());
  std::vector<std::size_t> perm(2 * s);
  for (int i = 0; i < s; ++i) {
    perm[i] = 2 * i;
    perm[s + i] = 2 * i + 1;
  }
  SparseMatrix m = SparseMatrix::identity(f, 1);
  for (int i = 0; i < s; ++i) m = kron(m, h.mul());
  return m * tensor_permutation(f, dims, perm);
}

// Δ^(s−1)∘μ^(k): A^k → A^s
SparseMatrix product_then_coproduct(const HopfAlgebra& h, int s, int k) {
  return iterated_comul(h, s - 1) * iterated_mul(h, k);
}

SparseMatrix block(const SparseMatrix& m, Index r0, Index nr, Index c0, Index nc) {
  std::vector<SparseVec> cols(nc);
  for (Index j = 0; j < nc; ++j)
    for (const Entry& e : m.column(c0 + j))
      if (e.index >= r0 && e.index < r0 + nr) cols[j].push_back({e.index - r0, e.value});
  return SparseMatrix::from_columns(m.field(), nr, std::move(cols));
}

Index component_rows(const HopfBimodule& n, int t) { return a4_target(n, t).dim; }
Index component_cols(const HopfBimodule& m, int k) { return a4_source(m, k).dim; }

void require_degree(const A4Cochain& c) {
  if (c.degree < 0 || c.components.size() != static_cast<std::size_t>(c.degree + 1))
    throw Error("cochain of degree " + std::to_string(c.degree) + " has " + std::to_string(c.components.size()) +
                " components");
}

void require_compatible(const A4Cochain& a, const A4Cochain& b) {
  if (a.degree != b.degree || !same_bimodule(a.src, b.src) || !same_bimodule(a.tgt, b.tgt))
    throw Error("cochains of different shapes");
}

}  // namespace

bool operator==(const A4Cochain& a, const A4Cochain& b) {
  return a.degree == b.degree && same_bimodule(a.src, b.src) && same_bimodule(a.tgt, b.tgt) &&
         a.components == b.components;
}

A4Cochain zero_cochain(const HopfBimodule& m, const HopfBimodule& n, int degree) {
  if (degree < 0) throw Error("negative cochain degree");
  if (!same_algebra(m.algebra, n.algebra)) throw Error("cochain between bimodules over different algebras");
  A4Cochain c{m, n, degree, {}};
  for (int t = 0; t <= degree; ++t)
    c.components.push_back(SparseMatrix::zero(m.field(), component_rows(n, t), component_cols(m, degree - t)));
  return c;
}

A4Cochain random_cochain(const HopfBimodule& m, const HopfBimodule& n, int degree, std::mt19937_64& rng) {
  A4Cochain c = zero_cochain(m, n, degree);
  const std::uint32_t p = m.field().p();
  for (int t = 0; t <= degree; ++t) {
    auto cell = constrained_hom_basis(a4_source(m, degree - t), a4_target(n, t), kLeftModule | kRightComodule);
    std::vector<Elem> x(cell.dim());
    for (auto& v : x) v = static_cast<Elem>(rng() % p);
    c.components[t] = cell.combine(x);
  }
  return c;
}

A4Cochain degree_zero_cochain(const HopfBimodule& m, const HopfBimodule& n, const SparseMatrix& g) {
  A4Cochain c = zero_cochain(m, n, 0);
  if (g.rows() != n.dim || g.cols() != m.dim) throw Error("degree-0 cochain has the wrong shape");
  c.components[0] = g;
  return c;
}

std::vector<std::string> check_cochain(const A4Cochain& c) {
  std::vector<std::string> out;
  if (c.degree < 0 || c.components.size() != static_cast<std::size_t>(c.degree + 1)) {
    out.push_back("component count");
    return out;
  }
  for (int t = 0; t <= c.degree; ++t) {
    const std::string at = " (component " + std::to_string(t) + ")";
    auto s = a4_source(c.src, c.degree - t);
    auto g = a4_target(c.tgt, t);
    const SparseMatrix& u = c.components[t];
    if (u.rows() != g.dim || u.cols() != s.dim) {
      out.push_back("shape" + at);
      continue;
    }
    if (!is_left_module_morphism(u, s, g)) out.push_back("left module map" + at);
    if (!is_right_comodule_morphism(u, s, g)) out.push_back("right comodule map" + at);
  }
  return out;
}

A4Cochain operator+(const A4Cochain& a, const A4Cochain& b) {
  require_compatible(a, b);
  A4Cochain c = a;
  for (std::size_t t = 0; t < c.components.size(); ++t) c.components[t] = a.components[t] + b.components[t];
  return c;
}

A4Cochain scale(Elem k, const A4Cochain& a) {
  A4Cochain c = a;
  for (auto& u : c.components) u = scale(k, u);
  return c;
}

A4Cochain coboundary(const A4Cochain& c) {
  require_degree(c);
  const int n = c.degree;
  A4Cochain d = zero_cochain(c.src, c.tgt, n + 1);
  for (int t = 0; t <= n; ++t) {
    d.components[t] = d.components[t] + a4_horizontal(c.src, c.tgt, t, n - t).apply(c.components[t]);
    d.components[t + 1] = d.components[t + 1] + a4_vertical(c.src, c.tgt, t, n - t).apply(c.components[t]);
  }
  return d;
}

bool is_cocycle(const A4Cochain& c) {
  for (const auto& u : coboundary(c).components)
    if (!u.is_zero()) return false;
  return true;
}

A4Cochain cup(const A4Cochain& f, const A4Cochain& g) {
  require_degree(f);
  require_degree(g);
  if (!same_bimodule(f.tgt, g.src)) throw Error("cup: target of the first cochain is not the source of the second");
  const HopfAlgebra& h = *f.src.algebra;
  const PrimeField fld = h.field();
  const int p = f.degree, q = g.degree, n = p + q;
  const HopfBimodule& l = f.tgt;
  A4Cochain out = zero_cochain(f.src, g.tgt, n);
  for (int s = 0; s <= p; ++s)
    for (int r = 0; r <= q; ++r) {
      const int t = s + r, k = q - r;
      const SparseMatrix& fs = f.components[s];
      const SparseMatrix& gr = g.components[r];
      if (fs.is_zero() || gr.is_zero()) continue;
      // M⊗A^{p−s}⊗A^k → (A^s⊗L)⊗(A^s⊗A^k)
      SparseMatrix legs = kron(product_then_coproduct(h, s, k), tensor_identity(h, k)) * split(h, k);
      SparseMatrix x = kron(fs, legs);
      const Index as = checked_power(h.dim(), s), ak = checked_power(h.dim(), k);
      const Index dims[] = {as, l.dim, as, ak};
      const std::size_t perm[] = {0, 2, 1, 3};
      x = tensor_permutation(fld, dims, perm) * x;
      x = kr(fld, {factorwise_product(h, s), SparseMatrix::identity(fld, l.dim), tensor_identity(h, k)}) * x;
      x = kron(tensor_identity(h, s), gr) * x;
      out.components[t] = out.components[t] + scale(fld.sign(s * k), x);
    }
  return out;
}

A4Cochain cross(const A4Cochain& f, const A4Cochain& g) {
  return scale(f.src.field().sign(f.degree * g.degree), cup(f, g));
}

bool cup_is_derivation_check(const A4Cochain& f, const A4Cochain& g) {
  const PrimeField fld = f.src.field();
  A4Cochain lhs = coboundary(cup(f, g));
  A4Cochain rhs = cup(coboundary(f), g) + scale(fld.sign(f.degree), cup(f, coboundary(g)));
  return lhs == rhs;
}

bool partial_assoc_check(const A4Cochain& f, const A4Cochain& g, const A4Cochain& h0) {
  if (h0.degree != 0) throw Error("partial associativity needs a degree-0 third factor");
  return cup(cup(f, g), h0) == cup(f, cup(g, h0));
}

A4CochainSpace::A4CochainSpace(const HopfBimodule& m, const HopfBimodule& n, int degree)
    : m_(m), n_(n), degree_(degree), grid_(a4_grid(m, n, degree + 1, false)), total_(total_complex(grid_.complex, degree)) {
  if (degree < 0) throw Error("negative cochain degree");
}

std::vector<Elem> A4CochainSpace::coordinates(const A4Cochain& c) const {
  if (c.degree != degree_) throw Error("cochain degree does not match the space");
  std::vector<Elem> out;
  out.reserve(dim());
  for (int t = 0; t <= degree_; ++t) {
    const auto& cell = grid_.cells[DoubleComplex::cell(t, degree_ - t)];
    if (!cell.contains(c.components[t])) throw Error("component " + std::to_string(t) + " is not in its cell");
    auto x = cell.coordinates(c.components[t]);
    out.insert(out.end(), x.begin(), x.end());
  }
  return out;
}

A4Cochain A4CochainSpace::cochain(std::span<const Elem> coords) const {
  if (coords.size() != dim()) throw Error("coordinate vector has the wrong length");
  A4Cochain c = zero_cochain(m_, n_, degree_);
  std::size_t off = 0;
  for (int t = 0; t <= degree_; ++t) {
    const auto& cell = grid_.cells[DoubleComplex::cell(t, degree_ - t)];
    c.components[t] = cell.combine(coords.subspan(off, cell.dim()));
    off += cell.dim();
  }
  return c;
}

std::vector<A4Cochain> A4CochainSpace::cocycle_basis() const {
  SubspaceBasis k = kernel_basis(total_.d[degree_]);
  std::vector<A4Cochain> out;
  for (const auto& v : k.vectors) out.push_back(cochain(dense_from_sparse(v, dim())));
  return out;
}

std::vector<A4Cochain> A4CochainSpace::cohomology_basis() const {
  const PrimeField f = total_.field;
  RowEchelon ech(f, dim());
  if (degree_ > 0) {
    const SparseMatrix& d = total_.d[degree_ - 1];
    for (Index j = 0; j < d.cols(); ++j) ech.insert(d.column(j));
  }
  std::vector<A4Cochain> out;
  for (const auto& v : kernel_basis(total_.d[degree_]).vectors)
    if (ech.insert(v)) out.push_back(cochain(dense_from_sparse(v, dim())));
  return out;
}

std::optional<A4Cochain> A4CochainSpace::bounding(const A4Cochain& c) const {
  if (degree_ == 0) throw Error("bounding needs degree at least 1");
  auto x = solve(total_.d[degree_ - 1], coordinates(c));
  if (!x) return std::nullopt;
  A4CochainSpace below(m_, n_, degree_ - 1);
  return below.cochain(*x);
}

bool A4CochainSpace::is_coboundary(const A4Cochain& c) const {
  if (degree_ == 0) {
    for (const auto& u : c.components)
      if (!u.is_zero()) return false;
    return true;
  }
  return bounding(c).has_value();
}

bool operator==(const HbCochain& a, const HbCochain& b) {
  return a.degree == b.degree && same_algebra(a.algebra, b.algebra) && a.components == b.components;
}

HbCochain hb_cup(const HbCochain& f, const HbCochain& g) {
  if (!same_algebra(f.algebra, g.algebra)) throw Error("hb_cup: cochains over different algebras");
  const HopfAlgebra& h = *f.algebra;
  const PrimeField fld = h.field();
  const int p = f.degree, q = g.degree, n = p + q;
  HbCochain out{f.algebra, n, {}};
  for (int t = 0; t <= n; ++t)
    out.components.push_back(SparseMatrix::zero(fld, checked_power(h.dim(), t), checked_power(h.dim(), n - t)));
  for (int s = 0; s <= p; ++s)
    for (int r = 0; r <= q; ++r) {
      const int t = s + r, j = p - s, k = q - r;
      const SparseMatrix& fs = f.components[s];
      const SparseMatrix& gr = g.components[r];
      if (fs.is_zero() || gr.is_zero()) continue;
      // A^{j}⊗A^{k} → A^j⊗A^k⊗A^j⊗A^k → A^s⊗A^s⊗A^r⊗A^r → A^s⊗A^r
      SparseMatrix x = split(h, j + k);
      x = kr(fld, {fs, product_then_coproduct(h, s, k), product_then_coproduct(h, r, j), gr}) * x;
      x = kron(factorwise_product(h, s), factorwise_product(h, r)) * x;
      out.components[t] = out.components[t] + scale(fld.sign(s * k), x);
    }
  return out;
}

HbCochain hb_coboundary(const HbCochain& c) {
  const HopfAlgebra& h = *c.algebra;
  const PrimeField fld = h.field();
  const int n = c.degree;
  HbCochain d{c.algebra, n + 1, {}};
  for (int t = 0; t <= n + 1; ++t)
    d.components.push_back(SparseMatrix::zero(fld, checked_power(h.dim(), t), checked_power(h.dim(), n + 1 - t)));
  for (int t = 0; t <= n; ++t) {
    d.components[t] = d.components[t] + hb_horizontal(h, t, n - t).apply(c.components[t]);
    d.components[t + 1] = d.components[t + 1] + hb_vertical(h, t, n - t).apply(c.components[t]);
  }
  return d;
}

A4Cochain hb_to_a4(const HbCochain& c) {
  HopfBimodule a = regular_bimodule(c.algebra);
  A4Cochain out = zero_cochain(a, a, c.degree);
  for (int t = 0; t <= c.degree; ++t) out.components[t] = hb_to_a4(c.algebra, t, c.degree - t, c.components[t]);
  return out;
}

HbCochain a4_to_hb(const A4Cochain& c) {
  HbCochain out{c.src.algebra, c.degree, {}};
  for (int t = 0; t <= c.degree; ++t)
    out.components.push_back(a4_to_hb(c.src.algebra, t, c.degree - t, c.components[t]));
  return out;
}

namespace {

// Middle L⊕R with the right action of R perturbed by f0: R⊗A → L and the left coaction by f1: R → A⊗L.
HopfBimodule glue(const HopfBimodule& l, const HopfBimodule& r, const SparseMatrix& f0, const SparseMatrix& f1) {
  const PrimeField fld = l.field();
  const Index n = l.algebra->dim(), dl = l.dim, dr = r.dim, d = dl + dr;
  HopfBimodule mid{l.algebra, d, {}, {}, {}, {}, "(" + l.name + ")+(" + r.name + ")"};
  std::vector<SparseMatrix::Triplet> al, ar, cl, cr;
  for (Index a = 0; a < n; ++a)
    for (Index v = 0; v < d; ++v) {
      const bool in_l = v < dl;
      const Index v1 = in_l ? v : v - dl;
      const Index shift = in_l ? 0 : dl;
      for (const Entry& e : (in_l ? l : r).act_left.column(a * (in_l ? dl : dr) + v1))
        al.push_back({e.index + shift, a * d + v, e.value});
      for (const Entry& e : (in_l ? l : r).act_right.column(v1 * n + a))
        ar.push_back({e.index + shift, v * n + a, e.value});
      if (!in_l)
        for (const Entry& e : f0.column(v1 * n + a)) ar.push_back({e.index, v * n + a, e.value});
    }
  for (Index v = 0; v < d; ++v) {
    const bool in_l = v < dl;
    const Index v1 = in_l ? v : v - dl;
    const Index shift = in_l ? 0 : dl, dv = in_l ? dl : dr;
    for (const Entry& e : (in_l ? l : r).coact_left.column(v1)) {
      const Index a = e.index / dv, w = e.index % dv;
      cl.push_back({a * d + w + shift, v, e.value});
    }
    if (!in_l)
      for (const Entry& e : f1.column(v1)) {
        const Index a = e.index / dl, w = e.index % dl;
        cl.push_back({a * d + w, v, e.value});
      }
    for (const Entry& e : (in_l ? l : r).coact_right.column(v1)) {
      const Index w = e.index / n, a = e.index % n;
      cr.push_back({(w + shift) * n + a, v, e.value});
    }
  }
  mid.act_left = SparseMatrix::from_triplets(fld, d, n * d, al);
  mid.act_right = SparseMatrix::from_triplets(fld, d, d * n, ar);
  mid.coact_left = SparseMatrix::from_triplets(fld, n * d, d, cl);
  mid.coact_right = SparseMatrix::from_triplets(fld, d * n, d, cr);
  return mid;
}

Extension standard_extension(const HopfBimodule& l, const HopfBimodule& r, HopfBimodule mid) {
  const PrimeField fld = l.field();
  const Index dl = l.dim, dr = r.dim, d = dl + dr;
  std::vector<SparseMatrix::Triplet> ti, tp;
  for (Index k = 0; k < dl; ++k) ti.push_back({k, k, 1});
  for (Index k = 0; k < dr; ++k) tp.push_back({k, dl + k, 1});
  return Extension{l, r, std::move(mid), SparseMatrix::from_triplets(fld, d, dl, ti),
                   SparseMatrix::from_triplets(fld, dr, d, tp)};
}

void require_same_ends(const Extension& a, const Extension& b) {
  if (!same_bimodule(a.left, b.left) || !same_bimodule(a.right, b.right))
    throw Error("extensions with different ends");
}

}  // namespace

Extension build_extension(const A4Cochain& f) {
  if (f.degree != 1) throw Error("an extension needs a 1-cochain, got degree " + std::to_string(f.degree));
  require_degree(f);
  const auto& f0 = f.components[0];
  const auto& f1 = f.components[1];
  if (f0.rows() != f.tgt.dim || f0.cols() != component_cols(f.src, 1) || f1.rows() != component_rows(f.tgt, 1) ||
      f1.cols() != f.src.dim)
    throw Error("1-cochain components have the wrong shape");
  return standard_extension(f.tgt, f.src, glue(f.tgt, f.src, f0, f1));
}

std::vector<std::string> verify_extension(const Extension& e) {
  std::vector<std::string> out;
  const Index dl = e.left.dim, dr = e.right.dim, d = e.middle.dim;
  if (d != dl + dr) out.push_back("middle dimension");
  if (e.inclusion.rows() != d || e.inclusion.cols() != dl || e.projection.rows() != dr || e.projection.cols() != d) {
    out.push_back("inclusion/projection shape");
    return out;
  }
  try {
    e.middle.check_shapes();
  } catch (const Error&) {
    out.push_back("middle structure map shapes");
    return out;
  }
  for (const auto& v : verify_hopf_bimodule(e.middle)) out.push_back("middle: " + v);
  if (!(e.projection * e.inclusion).is_zero()) out.push_back("projection after inclusion is not zero");
  if (rank(e.inclusion) != dl) out.push_back("inclusion not injective");
  if (rank(e.projection) != dr) out.push_back("projection not surjective");
  if (!is_hopf_morphism(e.inclusion, e.left, e.middle)) out.push_back("inclusion not a Hopf bimodule map");
  if (!is_hopf_morphism(e.projection, e.middle, e.right)) out.push_back("projection not a Hopf bimodule map");
  return out;
}

Extension extension_from_1cocycle(const A4Cochain& f) {
  Extension e = build_extension(f);
  auto v = verify_extension(e);
  if (!v.empty()) {
    std::string msg = "1-cochain does not define an extension of Hopf bimodules:";
    for (const auto& s : v) msg += " [" + s + "]";
    throw VerificationError(msg, v);
  }
  return e;
}

Extension pushout(const SparseMatrix& g, const HopfBimodule& n, const Extension& e) {
  const PrimeField fld = n.field();
  const Index dl = e.left.dim, dr = e.right.dim, dn = n.dim, dm = e.middle.dim, h = n.algebra->dim();
  if (g.rows() != dn || g.cols() != dl) throw Error("pushout: map has the wrong shape");
  if (!is_hopf_morphism(g, e.left, n)) throw Error("pushout: map is not a Hopf bimodule morphism");
  // A section σ of the projection and the retraction ρ of the inclusion with ρσ = 0.
  std::vector<SparseVec> sec(dr);
  for (Index j = 0; j < dr; ++j) {
    std::vector<Elem> ej(dr, 0);
    ej[j] = 1;
    auto x = solve(e.projection, ej);
    if (!x) throw Error("pushout: projection is not surjective");
    sec[j] = sparse_from_dense(*x);
  }
  SparseMatrix sigma = SparseMatrix::from_columns(fld, dm, std::move(sec));
  const SparseMatrix both[] = {e.inclusion, sigma};
  SparseMatrix inv = inverse(hstack(both));
  SparseMatrix retract = block(inv, 0, dl, 0, dm);
  // j: N⊕R → N⊕Mid and the quotient q: N⊕Mid → N⊕R, (x, m) ↦ (x + gρm, πm).
  SparseMatrix j = direct_sum(SparseMatrix::identity(fld, dn), sigma);
  const SparseMatrix top[] = {SparseMatrix::identity(fld, dn), g * retract};
  const SparseMatrix bottom[] = {SparseMatrix::zero(fld, dr, dn), e.projection};
  const SparseMatrix rows[] = {hstack(top), hstack(bottom)};
  SparseMatrix q = vstack(rows);
  HopfBimodule sum = direct_sum(n, e.middle);
  SparseMatrix id_a = SparseMatrix::identity(fld, h);
  HopfBimodule mid{n.algebra, dn + dr, {}, {}, {}, {}, "pushout"};
  mid.act_left = q * sum.act_left * kron(id_a, j);
  mid.act_right = q * sum.act_right * kron(j, id_a);
  mid.coact_left = kron(id_a, q) * sum.coact_left * j;
  mid.coact_right = kron(q, id_a) * sum.coact_right * j;
  return standard_extension(n, e.right, std::move(mid));
}

std::optional<SparseMatrix> extension_equivalence(const Extension& a, const Extension& b) {
  require_same_ends(a, b);
  const PrimeField fld = a.middle.field();
  const Index s = a.middle.dim, t = b.middle.dim, amb = checked_product(s, t);
  check_memory_guard(amb, "extension equivalence of ambient dimension " + std::to_string(amb));
  auto eqs = intertwining_equations(a.middle, b.middle, kHopfBimodule);
  std::vector<SparseMatrix::Triplet> trip;
  std::vector<Elem> rhs;
  Index row = 0;
  for (const auto& m : eqs) {
    for (Index j = 0; j < m.cols(); ++j)
      for (const Entry& e : m.column(j)) trip.push_back({row + e.index, j, e.value});
    row += m.rows();
  }
  rhs.assign(row, 0);
  // φ∘i_a = i_b, entry (r, c): Σ_k φ[r][k] i_a[k][c]
  const Index dl = a.left.dim, dr = a.right.dim;
  rhs.resize(row + t * dl, 0);
  for (Index c = 0; c < dl; ++c) {
    for (Index r = 0; r < t; ++r)
      for (const Entry& e : a.inclusion.column(c)) trip.push_back({row + r * dl + c, r * s + e.index, e.value});
    for (const Entry& e : b.inclusion.column(c)) rhs[row + e.index * dl + c] = e.value;
  }
  row += t * dl;
  // π_b∘φ = π_a, entry (r, c): Σ_k π_b[r][k] φ[k][c]
  for (Index k = 0; k < t; ++k)
    for (const Entry& e : b.projection.column(k))
      for (Index c = 0; c < s; ++c) trip.push_back({row + e.index * s + c, k * s + c, e.value});
  rhs.resize(row + dr * s, 0);
  for (Index c = 0; c < s; ++c)
    for (const Entry& e : a.projection.column(c)) rhs[row + e.index * s + c] = e.value;
  row += dr * s;
  SparseMatrix sys = SparseMatrix::from_triplets(fld, row, amb, trip);
  auto x = solve(sys, rhs);
  if (!x) return std::nullopt;
  SparseMatrix phi = unvectorize(fld, sparse_from_dense(*x), t, s);
  if (rank(phi) != s || s != t) throw Error("extension morphism is not invertible");
  return phi;
}

bool extensions_equivalent(const Extension& a, const Extension& b) { return extension_equivalence(a, b).has_value(); }

bool yoneda_degree10_check(const A4Cochain& f, const A4Cochain& g, bool use_cross) {
  if (f.degree != 1 || g.degree != 0) throw Error("the Yoneda comparison takes a 1-cocycle and a 0-cocycle");
  Extension pushed = pushout(g.components[0], g.tgt, extension_from_1cocycle(f));
  Extension product = extension_from_1cocycle(use_cross ? cross(f, g) : cup(f, g));
  return extensions_equivalent(pushed, product);
}

}  // namespace hopfcoh
