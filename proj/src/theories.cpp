#include "hopfcoh/theories.hpp"

#include <chrono>
#include <functional>

#include "hopfcoh/parallel.hpp"

namespace hopfcoh {

namespace {

SparseMatrix eye(PrimeField f, Index n) { return SparseMatrix::identity(f, n); }

SparseMatrix kr(std::initializer_list<SparseMatrix> fs) { return kron(std::span<const SparseMatrix>(fs.begin(), fs.size())); }

SparseMatrix eye_power(const HopfAlgebra& h, int k) { return eye(h.field(), checked_power(h.dim(), k)); }

std::vector<HopfBimodule> copies(const AlgebraPtr& h, int k) { return std::vector<HopfBimodule>(k, regular_bimodule(h)); }

/// Two-sided action a⊗v⊗b ↦ a·v·b.
SparseMatrix two_sided(const HopfBimodule& v) {
  return v.act_left * kron(v.algebra->identity(), v.act_right);
}

/// (δ_L⊗1)∘δ_R : V → A⊗V⊗A.
SparseMatrix two_sided_coaction(const HopfBimodule& v) {
  return kron(v.coact_left, v.algebra->identity()) * v.coact_right;
}

std::string at(int p, int q) { return "(" + std::to_string(p) + "," + std::to_string(q) + ")"; }

/// Runs f, rethrowing guard errors with the cell named.
template <class F>
auto in_cell(int p, int q, F&& f) {
  try {
    return f();
  } catch (const ResourceGuardError& e) {
    throw ResourceGuardError(std::string(e.what()) + " at cell " + at(p, q), e.required(), e.limit());
  }
}

struct CellPositions {
  std::vector<std::pair<int, int>> pos;
  explicit CellPositions(int bound) : pos(DoubleComplex::cell_count(bound)) {
    for (int t = 0; t <= bound; ++t)
      for (int p = 0; p <= t; ++p) pos[DoubleComplex::cell(p, t - p)] = {p, t - p};
  }
};

/// Computes the cell spaces in parallel, then the differentials.
HomGrid make_grid(PrimeField f, int bound, const std::function<ConstrainedHomSpace(int, int)>& space,
                  const std::function<SparseMatrix(int, int, const ConstrainedHomSpace&, const ConstrainedHomSpace&)>& horiz,
                  const std::function<SparseMatrix(int, int, const ConstrainedHomSpace&, const ConstrainedHomSpace&)>& vert) {
  if (bound < 0) throw Error("degree bound must be non-negative");
  CellPositions cp(bound);
  const std::size_t cells = cp.pos.size();
  HomGrid g;
  g.cells.resize(cells);
  std::vector<double> secs(cells, 0.0);
  parallel_for(cells, [&](std::size_t c) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto [p, q] = cp.pos[c];
    g.cells[c] = in_cell(p, q, [&] { return space(p, q); });
    secs[c] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  });
  auto cell_of = [&](int p, int q) -> const ConstrainedHomSpace& { return g.cells[DoubleComplex::cell(p, q)]; };
  g.complex = build_double_complex(
      f, bound, [&](int p, int q) { return static_cast<Index>(cell_of(p, q).dim()); },
      [&](int p, int q) { return in_cell(p, q, [&] { return horiz(p, q, cell_of(p, q), cell_of(p, q + 1)); }); },
      [&](int p, int q) { return in_cell(p, q, [&] { return vert(p, q, cell_of(p, q), cell_of(p + 1, q)); }); });
  g.seconds = secs;
  for (std::size_t c = 0; c < cells; ++c) g.seconds[c] += g.complex.seconds[c];
  return g;
}

/// Differential in cell coordinates; full Hom cells need no change of coordinates.
SparseMatrix in_cells(const HomOperator& op, const ConstrainedHomSpace& src, const ConstrainedHomSpace& tgt) {
  if (src.constraints == 0 && tgt.constraints == 0) return op.matrix();
  return restrict_operator(op, src, tgt);
}

/// Hom_{A4}(A⊗V⊗A, T) for a source free as a bimodule on V: bimodule maps are φ_β(a⊗v⊗b) = a·β(v)·b
/// for β in Hom_k(V, T), and since coactions are bimodule maps the comodule equations need only hold
/// on the generators 1⊗v⊗1.
ConstrainedHomSpace free_source_hom(const HopfBimodule& src, Index core, const HopfBimodule& tgt) {
  const PrimeField f = src.field();
  const HopfAlgebra& h = *src.algebra;
  const Index n = h.dim(), t = tgt.dim;
  const Index amb = checked_product(src.dim, t);
  check_memory_guard(amb, "Hom(" + src.name + ", " + tgt.name + ") has ambient dimension " + std::to_string(amb));
  const SparseMatrix act = two_sided(tgt);
  const SparseMatrix gen = kron(kron(h.unit_map(), SparseMatrix::identity(f, core)), h.unit_map());
  const SparseMatrix id_a = h.identity();
  HomOperator left(f, core, t, core, n * t);
  left.sandwich(tgt.coact_left * act, gen, n, n);
  left.sandwich(kron(id_a, act), src.coact_left * gen, n * n, n, f.neg(1));
  HomOperator right(f, core, t, core, t * n);
  right.sandwich(tgt.coact_right * act, gen, n, n);
  right.sandwich(kron(act, id_a), src.coact_right * gen, n, n * n, f.neg(1));
  const SparseMatrix eqs[] = {left.matrix(), right.matrix()};
  SubspaceBasis k = stacked_kernel(eqs, checked_product(core, t));
  HomOperator lift(f, core, t, src.dim, t);
  lift.sandwich(act, SparseMatrix::identity(f, src.dim), n, n);
  std::vector<SparseVec> cols;
  for (const auto& v : k.vectors) cols.push_back(vectorize(lift.apply(unvectorize(f, v, t, core))));
  ConstrainedHomSpace out{f, src.dim, t, kHopfBimodule, {}};
  if (cols.empty()) {
    out.basis.length = amb;
    return out;
  }
  out.basis = column_space(SparseMatrix::from_columns(f, amb, std::move(cols)));
  return out;
}

ConstrainedHomSpace empty_cell(PrimeField f, Index s, Index t) {
  ConstrainedHomSpace h{f, s, t, kHopfBimodule, {}};
  h.basis.length = s * t;
  return h;
}

}  // namespace

std::string engine_name(Engine e) {
  switch (e) {
    case Engine::GS: return "gs";
    case Engine::GSReduced: return "gs-reduced";
    case Engine::A4: return "a4";
    case Engine::A4Unreduced: return "a4-unreduced";
    case Engine::HB: return "hb";
    case Engine::HBTruncated: return "hb-truncated";
    case Engine::ExtX: return "ext-x";
  }
  return "?";
}

std::optional<Engine> parse_engine(const std::string& s) {
  for (Engine e : {Engine::GS, Engine::GSReduced, Engine::A4, Engine::A4Unreduced, Engine::HB, Engine::HBTruncated,
                   Engine::ExtX})
    if (engine_name(e) == s) return e;
  return std::nullopt;
}

// ---- Gerstenhaber–Schack ----

HopfBimodule gs_reduced_source(const HopfBimodule& m, int q) {
  if (q == 0) return m;
  auto fs = copies(m.algebra, 2 * q + 1);
  fs[q] = m;
  return codiagonal_tensor(fs);
}

HopfBimodule gs_reduced_target(const HopfBimodule& n, int p) {
  if (p == 0) return n;
  auto fs = copies(n.algebra, 2 * p + 1);
  fs[p] = n;
  return diagonal_tensor(fs);
}

HomOperator gs_reduced_horizontal(const HopfBimodule& m, const HopfBimodule& n, int p, int q) {
  const HopfAlgebra& h = *m.algebra;
  const PrimeField f = h.field();
  const Index nn = h.dim();
  HopfBimodule t = gs_reduced_target(n, p);
  const Index s = gs_reduced_source(m, q).dim, s2 = checked_product(checked_product(s, nn), nn);
  HomOperator op(f, s, t.dim, s2, t.dim);
  op.sandwich(two_sided(t), eye(f, s2), nn, nn);
  const SparseMatrix im = eye(f, m.dim);
  for (int i = 1; i <= q; ++i)
    op.right(kr({eye_power(h, i - 1), h.mul(), eye_power(h, q - i), im, eye_power(h, q - i), h.mul(), eye_power(h, i - 1)}),
             f.sign(i));
  op.right(kr({eye_power(h, q), two_sided(m), eye_power(h, q)}), f.sign(q + 1));
  return op;
}

HomOperator gs_reduced_vertical(const HopfBimodule& m, const HopfBimodule& n, int p, int q) {
  const HopfAlgebra& h = *m.algebra;
  const PrimeField f = h.field();
  HopfBimodule s = gs_reduced_source(m, q);
  const Index t = gs_reduced_target(n, p).dim, t2 = gs_reduced_target(n, p + 1).dim;
  HomOperator op(f, s.dim, t, s.dim, t2);
  SparseMatrix proj = kr({h.counit_map(), eye(f, t2), h.counit_map()});
  op.sandwich(proj * cobar_differential(n, p), two_sided_coaction(s), h.dim(), h.dim(), f.sign(q));
  return op;
}

HomOperator gs_reduced_vertical_printed(const HopfBimodule& m, const HopfBimodule& n, int p, int q) {
  const HopfAlgebra& h = *m.algebra;
  const PrimeField f = h.field();
  HopfBimodule s = gs_reduced_source(m, q);
  const Index t = gs_reduced_target(n, p).dim, t2 = gs_reduced_target(n, p + 1).dim;
  HomOperator op(f, s.dim, t, s.dim, t2);
  const Elem sq = f.sign(q);
  op.sandwich(eye(f, t2), two_sided_coaction(s), h.dim(), h.dim(), sq);
  for (int i = 1; i <= p; ++i)
    op.left(kr({eye_power(h, i - 1), h.comul(), eye_power(h, p - i), eye(f, n.dim), eye_power(h, p - i), h.comul(),
                eye_power(h, i - 1)}),
            f.mul(sq, f.sign(i)));
  SparseMatrix both = kron(h.identity(), n.coact_right) * n.coact_left;
  op.left(kr({eye_power(h, p), both, eye_power(h, p)}), f.mul(sq, f.sign(p + 1)));
  return op;
}

SparseMatrix gs_extend(const HopfBimodule& m, const HopfBimodule& n, int p, int q, const SparseMatrix& beta) {
  const HopfAlgebra& h = *m.algebra;
  HopfBimodule s = gs_reduced_source(m, q);
  HopfBimodule c = cobar_term(n, p);
  SparseMatrix j = kr({h.identity(), beta, h.identity()}) * two_sided_coaction(s);
  return two_sided(c) * kr({h.identity(), j, h.identity()});
}

SparseMatrix gs_restrict(const HopfBimodule& m, const HopfBimodule& n, int p, int q, const SparseMatrix& alpha) {
  const HopfAlgebra& h = *m.algebra;
  const PrimeField f = h.field();
  const Index s = gs_reduced_source(m, q).dim, t = gs_reduced_target(n, p).dim;
  return kr({h.counit_map(), eye(f, t), h.counit_map()}) * alpha * kr({h.unit_map(), eye(f, s), h.unit_map()});
}

HomGrid gs_grid(const HopfBimodule& m, const HopfBimodule& n, int bound, bool reduced) {
  const PrimeField f = m.field();
  if (reduced) {
    std::vector<Index> sd, td;
    for (int k = 0; k <= bound; ++k) {
      sd.push_back(checked_product(checked_power(m.algebra->dim(), 2 * k), m.dim));
      td.push_back(checked_product(checked_power(n.algebra->dim(), 2 * k), n.dim));
    }
    return make_grid(
        f, bound, [&](int p, int q) { return full_hom(f, sd[q], td[p]); },
        [&](int p, int q, const ConstrainedHomSpace& a, const ConstrainedHomSpace& b) {
          return in_cells(gs_reduced_horizontal(m, n, p, q), a, b);
        },
        [&](int p, int q, const ConstrainedHomSpace& a, const ConstrainedHomSpace& b) {
          return in_cells(gs_reduced_vertical(m, n, p, q), a, b);
        });
  }
  std::vector<HopfBimodule> bars, cobars;
  for (int k = 0; k <= bound; ++k) {
    bars.push_back(bar_term(m, k));
    cobars.push_back(cobar_term(n, k));
  }
  return make_grid(
      f, bound,
      [&](int p, int q) {
        return free_source_hom(bars[q], checked_product(checked_power(m.algebra->dim(), 2 * q), m.dim), cobars[p]);
      },
      [&](int p, int q, const ConstrainedHomSpace& a, const ConstrainedHomSpace& b) {
        HomOperator op(f, bars[q].dim, cobars[p].dim, bars[q + 1].dim, cobars[p].dim);
        op.right(bar_differential(m, q + 1));
        return restrict_operator(op, a, b);
      },
      [&](int p, int q, const ConstrainedHomSpace& a, const ConstrainedHomSpace& b) {
        HomOperator op(f, bars[q].dim, cobars[p].dim, bars[q].dim, cobars[p + 1].dim);
        op.left(cobar_differential(n, p), f.sign(q));
        return restrict_operator(op, a, b);
      });
}

DoubleComplex gs_double_complex(const HopfBimodule& m, const HopfBimodule& n, int bound, bool reduced) {
  return gs_grid(m, n, bound, reduced).complex;
}

// ---- bialgebra complex ----

namespace {

SparseMatrix diagonal_left(const AlgebraPtr& h, int p) {
  if (p == 0) return h->counit_map();
  return diagonal_tensor(copies(h, p)).act_left;
}

SparseMatrix diagonal_right(const AlgebraPtr& h, int p) {
  if (p == 0) return h->counit_map();
  return diagonal_tensor(copies(h, p)).act_right;
}

SparseMatrix codiagonal_left(const AlgebraPtr& h, int q) {
  if (q == 0) return h->unit_map();
  return codiagonal_tensor(copies(h, q)).coact_left;
}

SparseMatrix codiagonal_right(const AlgebraPtr& h, int q) {
  if (q == 0) return h->unit_map();
  return codiagonal_tensor(copies(h, q)).coact_right;
}

AlgebraPtr share(const HopfAlgebra& h) { return std::make_shared<HopfAlgebra>(h); }

}  // namespace

HomOperator hb_horizontal(const HopfAlgebra& hh, int p, int q) {
  AlgebraPtr h = share(hh);
  const PrimeField f = h->field();
  const Index n = h->dim(), s = checked_power(n, q), t = checked_power(n, p), s2 = checked_power(n, q + 1);
  HomOperator op(f, s, t, s2, t);
  op.sandwich(diagonal_left(h, p), eye(f, s2), n, 1);
  for (int i = 1; i <= q; ++i) op.right(pad(*h, i - 1, h->mul(), q - i), f.sign(i));
  op.sandwich(diagonal_right(h, p), eye(f, s2), 1, n, f.sign(q + 1));
  return op;
}

HomOperator hb_vertical(const HopfAlgebra& hh, int p, int q) {
  AlgebraPtr h = share(hh);
  const PrimeField f = h->field();
  const Index n = h->dim(), s = checked_power(n, q), t = checked_power(n, p), t2 = checked_power(n, p + 1);
  HomOperator op(f, s, t, s, t2);
  const Elem sq = f.sign(q);
  op.sandwich(eye(f, t2), codiagonal_left(h, q), n, 1, sq);
  for (int i = 1; i <= p; ++i) op.left(pad(*h, i - 1, h->comul(), p - i), f.mul(sq, f.sign(i)));
  op.sandwich(eye(f, t2), codiagonal_right(h, q), 1, n, f.mul(sq, f.sign(p + 1)));
  return op;
}

SparseMatrix hb_to_a4(const AlgebraPtr& h, int p, int q, const SparseMatrix& beta) {
  SparseMatrix left = left_tensor_power(regular_bimodule(h), p).act_left;
  SparseMatrix inner = kron(beta, h->identity()) * codiagonal_right(h, q);
  return left * kron(h->identity(), inner);
}

SparseMatrix a4_to_hb(const AlgebraPtr& h, int p, int q, const SparseMatrix& alpha) {
  return kron(eye_power(*h, p), h->counit_map()) * alpha * kron(h->unit_map(), eye_power(*h, q));
}

HomGrid hb_grid(const AlgebraPtr& h, int bound, bool truncated) {
  const PrimeField f = h->field();
  const Index n = h->dim();
  auto zero_cell = [&](int p, int q) { return truncated && (p == 0 || q == 0); };
  return make_grid(
      f, bound,
      [&](int p, int q) {
        const Index s = checked_power(n, q), t = checked_power(n, p);
        return zero_cell(p, q) ? empty_cell(f, s, t) : full_hom(f, s, t);
      },
      [&](int p, int q, const ConstrainedHomSpace& a, const ConstrainedHomSpace& b) {
        if (zero_cell(p, q) || zero_cell(p, q + 1)) return SparseMatrix::zero(f, b.dim(), a.dim());
        return hb_horizontal(*h, p, q).matrix();
      },
      [&](int p, int q, const ConstrainedHomSpace& a, const ConstrainedHomSpace& b) {
        if (zero_cell(p, q) || zero_cell(p + 1, q)) return SparseMatrix::zero(f, b.dim(), a.dim());
        return hb_vertical(*h, p, q).matrix();
      });
}

DoubleComplex hb_double_complex(const AlgebraPtr& h, int bound, bool truncated) {
  return hb_grid(h, bound, truncated).complex;
}

// ---- Hopf bimodule cohomology ----

HopfBimodule a4_source(const HopfBimodule& m, int q) { return right_tensor_power(m, q); }
HopfBimodule a4_target(const HopfBimodule& n, int p) { return left_tensor_power(n, p); }

HomOperator a4_horizontal(const HopfBimodule& m, const HopfBimodule& n, int p, int q) {
  const HopfAlgebra& h = *m.algebra;
  const PrimeField f = h.field();
  HopfBimodule t = a4_target(n, p);
  const Index s = checked_product(m.dim, checked_power(h.dim(), q)), s2 = checked_product(s, h.dim());
  HomOperator op(f, s, t.dim, s2, t.dim);
  op.right(kron(m.act_right, eye_power(h, q)));
  for (int i = 1; i <= q; ++i) op.right(kron(eye(f, m.dim), pad(h, i - 1, h.mul(), q - i)), f.sign(i));
  op.sandwich(t.act_right, eye(f, s2), 1, h.dim(), f.sign(q + 1));
  return op;
}

HomOperator a4_vertical(const HopfBimodule& m, const HopfBimodule& n, int p, int q) {
  const HopfAlgebra& h = *m.algebra;
  const PrimeField f = h.field();
  HopfBimodule s = a4_source(m, q);
  const Index t = checked_product(checked_power(h.dim(), p), n.dim), t2 = checked_product(t, h.dim());
  HomOperator op(f, s.dim, t, s.dim, t2);
  const Elem sq = f.sign(q);
  op.sandwich(eye(f, t2), s.coact_left, h.dim(), 1, sq);
  for (int i = 1; i <= p; ++i) op.left(kron(pad(h, i - 1, h.comul(), p - i), eye(f, n.dim)), f.mul(sq, f.sign(i)));
  op.left(kron(eye_power(h, p), n.coact_left), f.mul(sq, f.sign(p + 1)));
  return op;
}

HomGrid a4_grid(const HopfBimodule& m, const HopfBimodule& n, int bound, bool unreduced) {
  const PrimeField f = m.field();
  const HopfAlgebra& h = *m.algebra;
  std::vector<HopfBimodule> src, tgt;
  const int shift = unreduced ? 1 : 0;
  for (int k = 0; k <= bound + 1; ++k) {
    src.push_back(a4_source(m, k + shift));
    tgt.push_back(a4_target(n, k + shift));
  }
  const unsigned constraints = unreduced ? kHopfBimodule : (kLeftModule | kRightComodule);
  auto space = [&](int p, int q) { return constrained_hom_basis(src[q], tgt[p], constraints); };
  if (!unreduced)
    return make_grid(
        f, bound, space,
        [&](int p, int q, const ConstrainedHomSpace& a, const ConstrainedHomSpace& b) {
          return restrict_operator(a4_horizontal(m, n, p, q), a, b);
        },
        [&](int p, int q, const ConstrainedHomSpace& a, const ConstrainedHomSpace& b) {
          return restrict_operator(a4_vertical(m, n, p, q), a, b);
        });
  return make_grid(
      f, bound, space,
      [&](int p, int q, const ConstrainedHomSpace& a, const ConstrainedHomSpace& b) {
        // λ : M⊗A^{q+2} → M⊗A^{q+1}
        SparseMatrix lambda = kron(m.act_right, eye_power(h, q + 1));
        for (int i = 0; i <= q; ++i)
          lambda = lambda + scale(f.sign(i + 1), kron(eye(f, m.dim), pad(h, i, h.mul(), q - i)));
        HomOperator op(f, src[q].dim, tgt[p].dim, src[q + 1].dim, tgt[p].dim);
        op.right(lambda);
        return restrict_operator(op, a, b);
      },
      [&](int p, int q, const ConstrainedHomSpace& a, const ConstrainedHomSpace& b) {
        // ρ : A^{p+1}⊗N → A^{p+2}⊗N
        SparseMatrix rho = kron(eye_power(h, p + 1), n.coact_left);
        rho = scale(f.sign(p + 1), rho);
        for (int i = 0; i <= p; ++i) rho = rho + scale(f.sign(i), kron(pad(h, i, h.comul(), p - i), eye(f, n.dim)));
        HomOperator op(f, src[q].dim, tgt[p].dim, src[q].dim, tgt[p + 1].dim);
        op.left(rho, f.sign(q));
        return restrict_operator(op, a, b);
      });
}

DoubleComplex a4_double_complex(const HopfBimodule& m, const HopfBimodule& n, int bound, bool unreduced) {
  return a4_grid(m, n, bound, unreduced).complex;
}

// ---- Ext over X ----

CochainComplex ext_x_complex(const HopfBimodule& m, const HopfBimodule& n, const XAlgebra& x, int top) {
  const PrimeField f = m.field();
  const Index d = x.dim();
  Index need = checked_product(checked_product(checked_power(d, top), m.dim), n.dim);
  if (need > memory_guard())
    throw ResourceGuardError("Ext over X to degree " + std::to_string(top) + " needs cochains of dimension " +
                                 std::to_string(need) + "; lower the degree bound",
                             need, memory_guard());
  XModule xm = bimodule_to_xmodule(m, x), xn = bimodule_to_xmodule(n, x);
  SparseMatrix mu = x.mul_matrix();
  CochainComplex c{f, 0, {}, {}};
  for (int k = 0; k <= top; ++k) c.dims.push_back(checked_power(d, k) * m.dim * n.dim);
  c.d.resize(static_cast<std::size_t>(top));
  parallel_for(static_cast<std::size_t>(top), [&](std::size_t kk) {
    const int k = static_cast<int>(kk);
    const Index s = checked_power(d, k) * m.dim, s2 = s * d;
    HomOperator op(f, s, n.dim, s2, n.dim);
    op.sandwich(xn.action, eye(f, s2), d, 1);
    for (int i = 1; i <= k; ++i)
      op.right(kr({eye(f, checked_power(d, i - 1)), mu, eye(f, checked_power(d, k - i)), eye(f, m.dim)}), f.sign(i));
    op.right(kron(eye(f, checked_power(d, k)), xm.action), f.sign(k + 1));
    c.d[kk] = op.matrix();
  });
  return c;
}

std::vector<Index> ext_x_dims(const HopfBimodule& m, const HopfBimodule& n, const XAlgebra& x, int n_max) {
  return cohomology_dims(ext_x_complex(m, n, x, n_max + 1), n_max);
}

// ---- reports ----

CohomologyReport compute_cohomology(Engine e, const HopfBimodule& m, const HopfBimodule& n, int n_max) {
  CohomologyReport r{e, {}, {}, {}, {}};
  if (e == Engine::ExtX) {
    XAlgebra x(m.algebra);
    CochainComplex c = ext_x_complex(m, n, x, n_max + 1);
    for (std::size_t k = 0; k < c.dims.size(); ++k) r.cell_dims.push_back({k, 0, c.dims[k]});
    r.violations = verify_complex(c);
    r.dims = cohomology_dims(c, n_max);
    return r;
  }
  const int bound = n_max + 1;
  HomGrid g;
  switch (e) {
    case Engine::GS: g = gs_grid(m, n, bound, false); break;
    case Engine::GSReduced: g = gs_grid(m, n, bound, true); break;
    case Engine::A4: g = a4_grid(m, n, bound, false); break;
    case Engine::A4Unreduced: g = a4_grid(m, n, bound, true); break;
    case Engine::HB: g = hb_grid(m.algebra, bound, false); break;
    case Engine::HBTruncated: g = hb_grid(m.algebra, bound, true); break;
    case Engine::ExtX: break;
  }
  for (int t = 0; t <= bound; ++t)
    for (int p = 0; p <= t; ++p)
      r.cell_dims.push_back({static_cast<Index>(p), static_cast<Index>(t - p), g.complex.dim(p, t - p)});
  for (int t = 0; t <= bound; ++t)
    for (int p = 0; p <= t; ++p) r.cell_seconds.push_back(g.seconds[DoubleComplex::cell(p, t - p)]);
  r.violations = verify_double_complex(g.complex);
  CochainComplex tot = total_complex(g.complex, n_max);
  for (auto& v : verify_complex(tot)) r.violations.push_back("total: " + v);
  r.dims = cohomology_dims(tot, n_max);
  return r;
}

VanishingReport projective_vanishing_check(const XAlgebra& x, const HopfBimodule& n, int n_max, Engine e) {
  HopfBimodule p = x_as_bimodule(x);
  VanishingReport out;
  out.dims = compute_cohomology(e, p, n, n_max).dims;
  for (std::size_t k = 1; k < out.dims.size(); ++k)
    if (out.dims[k] != 0) out.vanishes = false;
  return out;
}

}  // namespace hopfcoh
