#include "hopfcoh/complexes.hpp"

#include <chrono>
#include <string>

#include "hopfcoh/parallel.hpp"

namespace hopfcoh {

Index CochainComplex::dim(int n) const {
  if (n < start || n - start >= static_cast<int>(dims.size())) return 0;
  return dims[static_cast<std::size_t>(n - start)];
}

std::vector<std::string> verify_complex(const CochainComplex& c) {
  std::vector<std::string> bad;
  for (std::size_t k = 0; k < c.d.size(); ++k) {
    const int n = c.start + static_cast<int>(k);
    if (c.d[k].cols() != c.dim(n) || c.d[k].rows() != c.dim(n + 1))
      bad.push_back("shape of d^" + std::to_string(n));
  }
  if (!bad.empty()) return bad;
  for (std::size_t k = 0; k + 1 < c.d.size(); ++k)
    if (!(c.d[k + 1] * c.d[k]).is_zero()) bad.push_back("d^" + std::to_string(c.start + k + 1) + " d^" +
                                                         std::to_string(c.start + k) + " != 0");
  return bad;
}

std::vector<Index> cohomology_dims(const CochainComplex& c, int n_max) {
  if (n_max < 0) return {};
  if (n_max - c.start >= static_cast<int>(c.d.size()))
    throw Error("cohomology_dims: complex stored only to degree " + std::to_string(c.start + c.d.size()) +
                ", need degree " + std::to_string(n_max + 1));
  // ranks[k] = rank d^{k-1}, k = 0..n_max+1
  std::vector<Index> ranks(static_cast<std::size_t>(n_max) + 2, 0);
  parallel_for(ranks.size(), [&](std::size_t k) {
    const int n = static_cast<int>(k) - 1;
    if (n >= c.start) ranks[k] = rank(c.d[static_cast<std::size_t>(n - c.start)]);
  });
  std::vector<Index> out;
  for (int n = 0; n <= n_max; ++n) {
    const Index r_out = ranks[static_cast<std::size_t>(n) + 1], r_in = ranks[static_cast<std::size_t>(n)];
    out.push_back(c.dim(n) - r_out - r_in);
  }
  return out;
}

SparseMatrix ConstrainedHomSpace::map(std::size_t i) const {
  return unvectorize(field, basis.vectors[i], tgt_dim, src_dim);
}

SparseMatrix ConstrainedHomSpace::combine(std::span<const Elem> coords) const {
  return unvectorize(field, basis.combine(field, coords), tgt_dim, src_dim);
}

std::vector<Elem> ConstrainedHomSpace::coordinates(const SparseMatrix& f) const {
  return basis.coordinates(vectorize(f));
}

bool ConstrainedHomSpace::contains(const SparseMatrix& f) const {
  if (f.rows() != tgt_dim || f.cols() != src_dim) return false;
  SparseVec v = vectorize(f);
  return basis.combine(field, basis.coordinates(v)) == v;
}

std::vector<SparseMatrix> intertwining_equations(const HopfBimodule& src, const HopfBimodule& tgt,
                                                 unsigned constraints) {
  if (src.algebra.get() != tgt.algebra.get() && !(src.algebra->mul() == tgt.algebra->mul() &&
                                                   src.algebra->comul() == tgt.algebra->comul()))
    throw Error("constrained Hom between bimodules over different algebras");
  const PrimeField f = src.field();
  const Index n = src.algebra->dim(), V = src.dim, W = tgt.dim;
  const Index amb = checked_product(V, W);
  std::vector<SparseMatrix> out;
  std::vector<SparseMatrix::Triplet> t;
  auto emit = [&](Index rows) {
    out.push_back(SparseMatrix::from_triplets(f, rows, amb, t));
    t.clear();
  };
  if (constraints & kLeftModule) {
    // f(a·v) = a·f(v); row w·nV + a·V + v
    for (Index a = 0; a < n; ++a)
      for (Index v = 0; v < V; ++v)
        for (const Entry& e : src.act_left.column(a * V + v))
          for (Index w = 0; w < W; ++w) t.push_back({w * n * V + a * V + v, w * V + e.index, e.value});
    for (Index a = 0; a < n; ++a)
      for (Index w1 = 0; w1 < W; ++w1)
        for (const Entry& e : tgt.act_left.column(a * W + w1))
          for (Index v = 0; v < V; ++v)
            t.push_back({e.index * n * V + a * V + v, w1 * V + v, f.neg(e.value)});
    emit(W * n * V);
  }
  if (constraints & kRightModule) {
    // row w·Vn + v·n + a
    for (Index v = 0; v < V; ++v)
      for (Index a = 0; a < n; ++a)
        for (const Entry& e : src.act_right.column(v * n + a))
          for (Index w = 0; w < W; ++w) t.push_back({(w * V + v) * n + a, w * V + e.index, e.value});
    for (Index w1 = 0; w1 < W; ++w1)
      for (Index a = 0; a < n; ++a)
        for (const Entry& e : tgt.act_right.column(w1 * n + a))
          for (Index v = 0; v < V; ++v) t.push_back({(e.index * V + v) * n + a, w1 * V + v, f.neg(e.value)});
    emit(W * V * n);
  }
  if (constraints & kLeftComodule) {
    // (1⊗f)δ = δ f; row (a·W + w)·V + v
    for (Index v = 0; v < V; ++v)
      for (const Entry& e : src.coact_left.column(v)) {
        const Index a = e.index / V, v1 = e.index % V;
        for (Index w = 0; w < W; ++w) t.push_back({(a * W + w) * V + v, w * V + v1, e.value});
      }
    for (Index w1 = 0; w1 < W; ++w1)
      for (const Entry& e : tgt.coact_left.column(w1))
        for (Index v = 0; v < V; ++v) t.push_back({e.index * V + v, w1 * V + v, f.neg(e.value)});
    emit(n * W * V);
  }
  if (constraints & kRightComodule) {
    // row (w·n + a)·V + v
    for (Index v = 0; v < V; ++v)
      for (const Entry& e : src.coact_right.column(v)) {
        const Index v1 = e.index / n, a = e.index % n;
        for (Index w = 0; w < W; ++w) t.push_back({(w * n + a) * V + v, w * V + v1, e.value});
      }
    for (Index w1 = 0; w1 < W; ++w1)
      for (const Entry& e : tgt.coact_right.column(w1))
        for (Index v = 0; v < V; ++v) t.push_back({e.index * V + v, w1 * V + v, f.neg(e.value)});
    emit(W * n * V);
  }
  return out;
}

ConstrainedHomSpace constrained_hom_basis(const HopfBimodule& src, const HopfBimodule& tgt, unsigned constraints) {
  const Index amb = checked_product(src.dim, tgt.dim);
  check_memory_guard(amb, "Hom(" + src.name + ", " + tgt.name + ") has ambient dimension " + std::to_string(amb));
  ConstrainedHomSpace h{src.field(), src.dim, tgt.dim, constraints, {}};
  auto eqs = intertwining_equations(src, tgt, constraints);
  h.basis = stacked_kernel(eqs, amb);
  return h;
}

ConstrainedHomSpace full_hom(PrimeField f, Index src_dim, Index tgt_dim) {
  const Index amb = checked_product(src_dim, tgt_dim);
  check_memory_guard(amb, "Hom_k of ambient dimension " + std::to_string(amb));
  ConstrainedHomSpace h{f, src_dim, tgt_dim, 0, stacked_kernel({}, amb)};
  return h;
}

DoubleComplex build_double_complex(PrimeField f, int bound, const std::function<Index(int, int)>& dims_of,
                                   const std::function<SparseMatrix(int, int)>& horiz,
                                   const std::function<SparseMatrix(int, int)>& vert) {
  if (bound < 0) throw Error("double complex bound must be non-negative");
  DoubleComplex dc{f, bound, {}, {}, {}, {}};
  const std::size_t cells = DoubleComplex::cell_count(bound);
  std::vector<std::pair<int, int>> pos(cells);
  for (int t = 0; t <= bound; ++t)
    for (int p = 0; p <= t; ++p) pos[DoubleComplex::cell(p, t - p)] = {p, t - p};
  dc.dims.assign(cells, 0);
  for (std::size_t c = 0; c < cells; ++c) dc.dims[c] = dims_of(pos[c].first, pos[c].second);
  dc.dh.assign(cells, SparseMatrix());
  dc.dc.assign(cells, SparseMatrix());
  std::vector<double> secs(2 * cells, 0.0);
  parallel_for(2 * cells, [&](std::size_t k) {
    const std::size_t c = k / 2;
    const auto [p, q] = pos[c];
    if (p + q >= bound) return;
    const auto t0 = std::chrono::steady_clock::now();
    struct Stamp {
      std::chrono::steady_clock::time_point t0;
      double& out;
      ~Stamp() { out = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(); }
    } stamp{t0, secs[k]};
    if (k % 2 == 0) {
      SparseMatrix m = horiz(p, q);
      if (m.cols() != dc.dims[c] || m.rows() != dc.dim(p, q + 1))
        throw Error("horizontal differential at (" + std::to_string(p) + "," + std::to_string(q) + ") has wrong shape");
      dc.dh[c] = std::move(m);
    } else {
      SparseMatrix m = vert(p, q);
      if (m.cols() != dc.dims[c] || m.rows() != dc.dim(p + 1, q))
        throw Error("vertical differential at (" + std::to_string(p) + "," + std::to_string(q) + ") has wrong shape");
      dc.dc[c] = std::move(m);
    }
  });
  dc.seconds.assign(cells, 0.0);
  for (std::size_t c = 0; c < cells; ++c) dc.seconds[c] = secs[2 * c] + secs[2 * c + 1];
  return dc;
}

std::vector<std::string> verify_double_complex(const DoubleComplex& dc) {
  std::vector<std::string> bad;
  for (int t = 0; t + 2 <= dc.bound; ++t)
    for (int p = 0; p <= t; ++p) {
      const int q = t - p;
      const std::string at = " at (" + std::to_string(p) + "," + std::to_string(q) + ")";
      if (!(dc.horizontal(p, q + 1) * dc.horizontal(p, q)).is_zero()) bad.push_back("d_h d_h != 0" + at);
      if (!(dc.vertical(p + 1, q) * dc.vertical(p, q)).is_zero()) bad.push_back("d_c d_c != 0" + at);
      if (!(dc.horizontal(p + 1, q) * dc.vertical(p, q) + dc.vertical(p, q + 1) * dc.horizontal(p, q)).is_zero())
        bad.push_back("d_h d_c + d_c d_h != 0" + at);
    }
  return bad;
}

Index total_offset(const DoubleComplex& dc, int p, int n) {
  Index off = 0;
  for (int r = 0; r < p; ++r) off += dc.dim(r, n - r);
  return off;
}

CochainComplex total_complex(const DoubleComplex& dc, int n_max) {
  if (n_max + 1 > dc.bound)
    throw Error("total complex to degree " + std::to_string(n_max) + " needs a grid of bound " +
                std::to_string(n_max + 1) + ", have " + std::to_string(dc.bound));
  CochainComplex c{dc.field, 0, {}, {}};
  for (int n = 0; n <= n_max + 1; ++n) c.dims.push_back(total_offset(dc, n + 1, n));
  for (int n = 0; n <= n_max; ++n) {
    std::vector<SparseMatrix::Triplet> t;
    for (int p = 0; p <= n; ++p) {
      const int q = n - p;
      const Index col0 = total_offset(dc, p, n);
      auto place = [&](const SparseMatrix& m, Index row0) {
        for (Index j = 0; j < m.cols(); ++j)
          for (const Entry& e : m.column(j)) t.push_back({row0 + e.index, col0 + j, e.value});
      };
      place(dc.horizontal(p, q), total_offset(dc, p, n + 1));
      place(dc.vertical(p, q), total_offset(dc, p + 1, n + 1));
    }
    c.d.push_back(SparseMatrix::from_triplets(dc.field, c.dims[n + 1], c.dims[n], t));
  }
  return c;
}

SparseMatrix induced_map(const ConstrainedHomSpace& src, const ConstrainedHomSpace& tgt,
                         const std::function<SparseMatrix(const SparseMatrix&)>& op) {
  std::vector<SparseVec> cols(src.dim());
  for (std::size_t i = 0; i < src.dim(); ++i) {
    SparseMatrix g = op(src.map(i));
    if (g.rows() != tgt.tgt_dim || g.cols() != tgt.src_dim) throw Error("induced_map: image has wrong shape");
    std::vector<Elem> x = tgt.coordinates(g);
    SparseVec col;
    for (Index k = 0; k < x.size(); ++k)
      if (x[k]) col.push_back({k, x[k]});
    cols[i] = std::move(col);
  }
  return SparseMatrix::from_columns(src.field, tgt.dim(), std::move(cols));
}

HomOperator::HomOperator(PrimeField f, Index s, Index t, Index s2, Index t2)
    : field_(f), s_(s), t_(t), s2_(s2), t2_(t2) {}

void HomOperator::left(const SparseMatrix& y, Elem c) {
  if (y.cols() != t_ || y.rows() != t2_ || s_ != s2_) throw Error("HomOperator::left: shape mismatch");
  terms_.push_back({0, y, {}, 0, 0, c});
}

void HomOperator::right(const SparseMatrix& x, Elem c) {
  if (x.rows() != s_ || x.cols() != s2_ || t_ != t2_) throw Error("HomOperator::right: shape mismatch");
  terms_.push_back({1, x.transpose(), {}, 0, 0, c});
}

void HomOperator::sandwich(const SparseMatrix& p, const SparseMatrix& q, Index l, Index r, Elem c) {
  if (q.cols() != s2_ || q.rows() != l * s_ * r || p.cols() != l * t_ * r || p.rows() != t2_)
    throw Error("HomOperator::sandwich: shape mismatch");
  terms_.push_back({2, p, q, l, r, c});
}

SparseMatrix HomOperator::matrix() const {
  const PrimeField f = field_;
  std::vector<SparseMatrix::Triplet> t;
  for (const Term& term : terms_) {
    if (term.c % f.p() == 0) continue;
    switch (term.kind) {
      case 0:  // (yβ)[y, u] = Σ_r y[y, r] β[r, u]
        for (Index r = 0; r < t_; ++r)
          for (const Entry& e : term.a.column(r))
            for (Index u = 0; u < s_; ++u) t.push_back({e.index * s_ + u, r * s_ + u, f.mul(term.c, e.value)});
        break;
      case 1:  // (βx)[r, u] = Σ_s β[r, s] x[s, u]; term.a holds xᵀ
        for (Index s = 0; s < s_; ++s)
          for (const Entry& e : term.a.column(s))
            for (Index r = 0; r < t_; ++r) t.push_back({r * s2_ + e.index, r * s_ + s, f.mul(term.c, e.value)});
        break;
      default:
        for (Index u = 0; u < s2_; ++u)
          for (const Entry& e : term.b.column(u)) {
            const Index b = e.index % term.r, mid = e.index / term.r;
            const Index a = mid / s_, s = mid % s_;
            const Elem cq = f.mul(term.c, e.value);
            for (Index r = 0; r < t_; ++r)
              for (const Entry& g : term.a.column((a * t_ + r) * term.r + b))
                t.push_back({g.index * s2_ + u, r * s_ + s, f.mul(cq, g.value)});
          }
    }
  }
  return SparseMatrix::from_triplets(f, t2_ * s2_, t_ * s_, t);
}

SparseMatrix HomOperator::apply(const SparseMatrix& beta) const {
  if (beta.rows() != t_ || beta.cols() != s_) throw Error("HomOperator::apply: shape mismatch");
  SparseMatrix out = SparseMatrix::zero(field_, t2_, s2_);
  for (const Term& term : terms_) {
    SparseMatrix m;
    if (term.kind == 0) {
      m = term.a * beta;
    } else if (term.kind == 1) {
      m = beta * term.a.transpose();
    } else {
      const SparseMatrix parts[] = {SparseMatrix::identity(field_, term.l), beta, SparseMatrix::identity(field_, term.r)};
      m = term.a * kron(parts) * term.b;
    }
    out = out + scale(term.c, m);
  }
  return out;
}

SparseMatrix restrict_operator(const HomOperator& op, const ConstrainedHomSpace& src, const ConstrainedHomSpace& tgt) {
  SparseMatrix m = op.matrix();
  if (m.cols() != src.ambient() || m.rows() != tgt.ambient()) throw Error("restrict_operator: shape mismatch");
  const PrimeField f = src.field;
  std::vector<SparseVec> cols(src.dim());
  for (std::size_t i = 0; i < src.dim(); ++i) {
    SparseVec img = m.apply(src.basis.vectors[i]);
    std::vector<Elem> x = tgt.basis.coordinates(img);
    if (tgt.basis.combine(f, x) != img) throw Error("differential leaves the target Hom space");
    SparseVec col;
    for (Index k = 0; k < x.size(); ++k)
      if (x[k]) col.push_back({k, x[k]});
    cols[i] = std::move(col);
  }
  return SparseMatrix::from_columns(f, tgt.dim(), std::move(cols));
}

}  // namespace hopfcoh
