#include "hopfcoh/xalgebra.hpp"

#include <algorithm>
#include <random>

namespace hopfcoh {

namespace {

void sort_entries(SparseVec& v) {
  std::sort(v.begin(), v.end(), [](const Entry& a, const Entry& b) { return a.index < b.index; });
}

std::vector<Elem> dense_square(const SparseMatrix& m) {
  const Index n = m.rows();
  std::vector<Elem> d(n * m.cols(), 0);
  for (Index c = 0; c < m.cols(); ++c)
    for (const Entry& e : m.column(c)) d[e.index * m.cols() + c] = e.value;
  return d;
}

}  // namespace

XAlgebra::XAlgebra(AlgebraPtr base) : base_(std::move(base)) {
  if (!base_) throw Error("XAlgebra: missing base algebra");
  const HopfAlgebra& h = *base_;
  const PrimeField f = h.field();
  dual_ = dual(h);
  n_ = h.dim();
  dim_ = checked_power(n_, 4);
  const Index n = n_;
  check_memory_guard(checked_product(dim_, n * n), "straightening table of X");

  // S[r*n+c] = coefficient of e_r in S(e_c)
  const auto S = dense_square(h.antipode());
  const auto Sinv = dense_square(h.antipode_inv());
  const SparseMatrix mu3 = iterated_mul(h, 3);
  const SparseMatrix delta2 = iterated_comul(h, 2);

  // l'_(1)(S a1) l'_(3)(S⁻¹ b1) collected as a vector over the middle leg u2; likewise for k'.
  // LP[((a1*n + b1)*n + i')*n + u2], KP[((a3*n + b3)*n + j')*n + v2]
  std::vector<Elem> LP(n * n * n * n, 0), KP(n * n * n * n, 0);
  for (Index col = 0; col < mu3.cols(); ++col) {
    const Index u1 = col / (n * n), u2 = (col / n) % n, u3 = col % n;
    for (const Entry& e : mu3.column(col))
      for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b) {
          Elem lp = f.mul(S[u1 * n + a], Sinv[u3 * n + b]);
          if (lp) {
            Elem& t = LP[((a * n + b) * n + e.index) * n + u2];
            t = f.add(t, f.mul(e.value, lp));
          }
          Elem kp = f.mul(Sinv[u1 * n + a], S[u3 * n + b]);
          if (kp) {
            Elem& t = KP[((a * n + b) * n + e.index) * n + u2];
            t = f.add(t, f.mul(e.value, kp));
          }
        }
  }

  straighten_.assign(n * n * n * n, {});
  Accumulator acc(f, dim_);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) {
      const SparseVec& alpha = delta2.column(a);
      const SparseVec& beta = delta2.column(b);
      for (Index ip = 0; ip < n; ++ip)
        for (Index jp = 0; jp < n; ++jp) {
          for (const Entry& x : alpha) {
            const Index a1 = x.index / (n * n), a2 = (x.index / n) % n, a3 = x.index % n;
            for (const Entry& y : beta) {
              const Index b1 = y.index / (n * n), b2 = (y.index / n) % n, b3 = y.index % n;
              const Elem c = f.mul(x.value, y.value);
              const Elem* lp = &LP[((a1 * n + b1) * n + ip) * n];
              const Elem* kp = &KP[((a3 * n + b3) * n + jp) * n];
              for (Index u2 = 0; u2 < n; ++u2) {
                if (!lp[u2]) continue;
                for (Index v2 = 0; v2 < n; ++v2)
                  if (kp[v2]) acc.add(index(u2, v2, a2, b2), f.mul(c, f.mul(lp[u2], kp[v2])));
              }
            }
          }
          straighten_[((a * n + b) * n + ip) * n + jp] = acc.take();
        }
    }
}

SparseVec XAlgebra::element(const SparseVec& l, const SparseVec& k, const SparseVec& a, const SparseVec& b) const {
  const PrimeField f = field();
  SparseVec out;
  for (const Entry& x : l)
    for (const Entry& y : k)
      for (const Entry& z : a)
        for (const Entry& w : b)
          out.push_back({index(x.index, y.index, z.index, w.index), f.mul(f.mul(x.value, y.value), f.mul(z.value, w.value))});
  sort_entries(out);
  return out;
}

SparseVec XAlgebra::counit_vector() const { return sparse_from_dense(base_->counit()); }
SparseVec XAlgebra::unit_vector() const { return sparse_from_dense(base_->unit()); }
SparseVec XAlgebra::unit() const { return element(counit_vector(), counit_vector(), unit_vector(), unit_vector()); }

SparseVec XAlgebra::product(Index x, Index y) const {
  const PrimeField f = field();
  const Index n = n_;
  const Index i = x / (n * n * n), j = (x / (n * n)) % n, k = (x / n) % n, l = x % n;
  const Index ip = y / (n * n * n), jp = (y / (n * n)) % n, kp = (y / n) % n, lp = y % n;
  Accumulator acc(f, dim_);
  for (const Entry& t : straighten(k, l, ip, jp)) {
    const Index u2 = t.index / (n * n * n), v2 = (t.index / (n * n)) % n, a2 = (t.index / n) % n, b2 = t.index % n;
    const SparseVec& p1 = dual_.product(u2, i);
    if (p1.empty()) continue;
    const SparseVec& p2 = dual_.product(j, v2);
    if (p2.empty()) continue;
    const SparseVec& p3 = base_->product(a2, kp);
    if (p3.empty()) continue;
    const SparseVec& p4 = base_->product(lp, b2);
    for (const Entry& e1 : p1)
      for (const Entry& e2 : p2) {
        Elem c12 = f.mul(t.value, f.mul(e1.value, e2.value));
        for (const Entry& e3 : p3)
          for (const Entry& e4 : p4)
            acc.add(index(e1.index, e2.index, e3.index, e4.index), f.mul(c12, f.mul(e3.value, e4.value)));
      }
  }
  return acc.take();
}

SparseVec XAlgebra::multiply(const SparseVec& x, const SparseVec& y) const {
  const PrimeField f = field();
  Accumulator acc(f, dim_);
  for (const Entry& a : x)
    for (const Entry& b : y) acc.axpy(f.mul(a.value, b.value), product(a.index, b.index));
  return acc.take();
}

SparseMatrix XAlgebra::mul_matrix() const {
  check_memory_guard(checked_product(dim_, dim_), "multiplication table of X");
  std::vector<SparseVec> cols(dim_ * dim_);
  for (Index x = 0; x < dim_; ++x)
    for (Index y = 0; y < dim_; ++y) cols[x * dim_ + y] = product(x, y);
  return SparseMatrix::from_columns(field(), dim_, std::move(cols));
}

SparseVec act(const XAlgebra& x, const XModule& v, const SparseVec& elem, const SparseVec& vec) {
  const PrimeField f = x.field();
  Accumulator acc(f, v.dim);
  for (const Entry& a : elem)
    for (const Entry& b : vec) acc.axpy(f.mul(a.value, b.value), v.action.column(a.index * v.dim + b.index));
  return acc.take();
}

std::vector<std::string> verify_x_associativity(const XAlgebra& x, int samples, std::uint64_t seed) {
  std::vector<std::string> bad;
  const Index d = x.dim();
  const SparseVec one = x.unit();
  for (Index a = 0; a < d; ++a) {
    SparseVec e{{a, 1}};
    if (x.multiply(one, e) != e || x.multiply(e, one) != e) {
      bad.push_back("unit fails on basis element " + std::to_string(a));
      break;
    }
  }
  auto check = [&](Index a, Index b, Index c) {
    SparseVec lhs = x.multiply(x.product(a, b), SparseVec{{c, 1}});
    SparseVec rhs = x.multiply(SparseVec{{a, 1}}, x.product(b, c));
    if (lhs != rhs) {
      bad.push_back("associativity fails at (" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")");
      return false;
    }
    return true;
  };
  if (samples < 0) {
    for (Index a = 0; a < d; ++a)
      for (Index b = 0; b < d; ++b)
        for (Index c = 0; c < d; ++c)
          if (!check(a, b, c)) return bad;
  } else {
    std::mt19937_64 rng(seed);
    for (int s = 0; s < samples; ++s) {
      Index a = rng() % d, b = rng() % d, c = rng() % d;
      if (!check(a, b, c)) return bad;
    }
  }
  return bad;
}

std::vector<std::string> verify_xmodule(const XAlgebra& x, const XModule& v, std::uint64_t seed, int samples,
                                        Index exhaustive_limit) {
  std::vector<std::string> bad;
  if (v.action.rows() != v.dim || v.action.cols() != x.dim() * v.dim) {
    bad.push_back("action has the wrong shape");
    return bad;
  }
  const SparseVec one = x.unit();
  for (Index b = 0; b < v.dim; ++b)
    if (act(x, v, one, SparseVec{{b, 1}}) != SparseVec{{b, 1}}) {
      bad.push_back("unit does not act as identity");
      break;
    }
  const Index d = x.dim();
  auto check = [&](Index a, Index b, Index w) {
    SparseVec e{{w, 1}};
    SparseVec lhs = act(x, v, SparseVec{{a, 1}}, v.action.column(b * v.dim + w));
    SparseVec rhs = act(x, v, x.product(a, b), e);
    if (lhs != rhs) {
      bad.push_back("action associativity fails at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                    std::to_string(w) + ")");
      return false;
    }
    return true;
  };
  if (d * d * v.dim <= exhaustive_limit) {
    for (Index a = 0; a < d; ++a)
      for (Index b = 0; b < d; ++b)
        for (Index w = 0; w < v.dim; ++w)
          if (!check(a, b, w)) return bad;
  } else {
    std::mt19937_64 rng(seed);
    for (int s = 0; s < samples; ++s)
      if (!check(rng() % d, rng() % d, rng() % v.dim)) return bad;
  }
  return bad;
}

XModule bimodule_to_xmodule(const HopfBimodule& m, const XAlgebra& x) {
  if (m.algebra != x.base() &&
      !(m.algebra->mul() == x.base()->mul() && m.algebra->comul() == x.base()->comul()))
    throw Error("bimodule_to_xmodule: algebra mismatch");
  const PrimeField f = m.field();
  const Index n = x.n(), dm = m.dim;
  const HopfAlgebra& h = *m.algebra;
  // a⊗v⊗b ↦ a·v·b
  const SparseMatrix two_sided = m.act_left * kron(h.identity(), m.act_right);
  // v ↦ v₍₋₁₎⊗v₍₀₎⊗v₍₁₎, split into the maps P_ij(v) = e_i*(v₍₋₁₎) e_j*(v₍₁₎) v₍₀₎
  const SparseMatrix coact = kron(m.coact_left, h.identity()) * m.coact_right;
  std::vector<std::vector<SparseMatrix::Triplet>> pij(n * n);
  for (Index w = 0; w < dm; ++w)
    for (const Entry& e : coact.column(w)) {
      const Index i = e.index / (dm * n), wp = (e.index / n) % dm, j = e.index % n;
      pij[i * n + j].push_back({wp, w, e.value});
    }
  std::vector<SparseMatrix> P;
  P.reserve(n * n);
  for (auto& ts : pij) P.push_back(SparseMatrix::from_triplets(f, dm, dm, ts));

  std::vector<SparseVec> cols(x.dim() * dm);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k)
        for (Index l = 0; l < n; ++l)
          for (Index v = 0; v < dm; ++v)
            cols[x.index(i, j, k, l) * dm + v] = P[i * n + j].apply(two_sided.column((k * dm + v) * n + l));
  return XModule{dm, SparseMatrix::from_columns(f, dm, std::move(cols))};
}

HopfBimodule xmodule_to_bimodule(const XModule& v, const XAlgebra& x) {
  const PrimeField f = x.field();
  const Index n = x.n(), dm = v.dim;
  const SparseVec eps = x.counit_vector(), one = x.unit_vector();
  std::vector<SparseVec> L(n * dm), R(dm * n), cL(dm), cR(dm);
  for (Index a = 0; a < n; ++a) {
    const SparseVec left = x.element(eps, eps, SparseVec{{a, 1}}, one);
    const SparseVec right = x.element(eps, eps, one, SparseVec{{a, 1}});
    const SparseVec lco = x.element(SparseVec{{a, 1}}, eps, one, one);
    const SparseVec rco = x.element(eps, SparseVec{{a, 1}}, one, one);
    for (Index w = 0; w < dm; ++w) {
      const SparseVec e{{w, 1}};
      L[a * dm + w] = act(x, v, left, e);
      R[w * n + a] = act(x, v, right, e);
      for (const Entry& t : act(x, v, lco, e)) cL[w].push_back({a * dm + t.index, t.value});
      for (const Entry& t : act(x, v, rco, e)) cR[w].push_back({t.index * n + a, t.value});
    }
  }
  for (auto& c : cL) sort_entries(c);
  for (auto& c : cR) sort_entries(c);
  HopfBimodule m;
  m.algebra = x.base();
  m.dim = dm;
  m.act_left = SparseMatrix::from_columns(f, dm, std::move(L));
  m.act_right = SparseMatrix::from_columns(f, dm, std::move(R));
  m.coact_left = SparseMatrix::from_columns(f, n * dm, std::move(cL));
  m.coact_right = SparseMatrix::from_columns(f, dm * n, std::move(cR));
  m.name = "xmodule";
  auto report = verify_hopf_bimodule(m);
  if (!report.empty()) throw Error("X-module does not give a Hopf bimodule: " + report.front());
  return m;
}

XModule x_regular_module(const XAlgebra& x) { return XModule{x.dim(), x.mul_matrix()}; }

HopfBimodule x_as_bimodule(const XAlgebra& x) {
  auto m = xmodule_to_bimodule(x_regular_module(x), x);
  m.name = "x";
  return m;
}

}  // namespace hopfcoh
