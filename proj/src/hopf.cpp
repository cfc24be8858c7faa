#include "hopfcoh/hopf.hpp"

#include <algorithm>
#include <array>

#include "hopfcoh/linalg.hpp"

namespace hopfcoh {

namespace {

SparseMatrix column_matrix(PrimeField f, const std::vector<Elem>& v) {
  return SparseMatrix::from_columns(f, v.size(), {sparse_from_dense(v)});
}

SparseMatrix row_matrix(PrimeField f, const std::vector<Elem>& v) { return column_matrix(f, v).transpose(); }

void require_shape(const SparseMatrix& m, Index rows, Index cols, const char* what) {
  if (m.rows() != rows || m.cols() != cols)
    throw Error(std::string("HopfAlgebra: ") + what + " has shape " + std::to_string(m.rows()) + "x" +
                std::to_string(m.cols()) + ", expected " + std::to_string(rows) + "x" + std::to_string(cols));
}

}  // namespace

HopfAlgebra::HopfAlgebra(PrimeField f, SparseMatrix mul, std::vector<Elem> unit, SparseMatrix comul,
                         std::vector<Elem> counit, SparseMatrix antipode, std::optional<SparseMatrix> antipode_inv,
                         std::string name)
    : field_(f), dim_(unit.size()), name_(std::move(name)), mul_(std::move(mul)), comul_(std::move(comul)),
      antipode_(std::move(antipode)), unit_(std::move(unit)), counit_(std::move(counit)) {
  const Index n = dim_;
  if (n == 0) throw Error("HopfAlgebra: dimension must be positive");
  require_shape(mul_, n, n * n, "mul");
  require_shape(comul_, n * n, n, "comul");
  require_shape(antipode_, n, n, "antipode");
  if (counit_.size() != n) throw Error("HopfAlgebra: counit length mismatch");
  if (antipode_inv) {
    require_shape(*antipode_inv, n, n, "antipode_inv");
    antipode_inv_ = std::move(*antipode_inv);
  } else {
    antipode_inv_ = inverse(antipode_);
  }
  unit_map_ = column_matrix(f, unit_);
  counit_map_ = row_matrix(f, counit_);
  identity_ = SparseMatrix::identity(f, n);
}

std::vector<std::string> verify_hopf(const HopfAlgebra& h) {
  std::vector<std::string> bad;
  const PrimeField f = h.field();
  const Index n = h.dim();
  const auto& I = h.identity();
  const auto& mu = h.mul();
  const auto& delta = h.comul();
  const auto& eta = h.unit_map();
  const auto& eps = h.counit_map();
  const auto& S = h.antipode();

  if (mu * kron(mu, I) != mu * kron(I, mu)) bad.push_back("associativity");
  if (mu * kron(eta, I) != I || mu * kron(I, eta) != I) bad.push_back("unit");
  if (kron(delta, I) * delta != kron(I, delta) * delta) bad.push_back("coassociativity");
  if (kron(eps, I) * delta != I || kron(I, eps) * delta != I) bad.push_back("counit");

  const Index dims[4] = {n, n, n, n};
  const std::size_t middle_swap[4] = {0, 2, 1, 3};
  SparseMatrix mu2 = kron(mu, mu) * tensor_permutation(f, dims, middle_swap);
  if (delta * mu != mu2 * kron(delta, delta)) bad.push_back("comultiplicativity");
  if (delta * eta != kron(eta, eta)) bad.push_back("comul of unit");
  if (eps * mu != kron(eps, eps)) bad.push_back("counit multiplicativity");
  if (eps * eta != SparseMatrix::identity(f, 1)) bad.push_back("counit of unit");

  SparseMatrix ee = eta * eps;
  if (mu * kron(S, I) * delta != ee || mu * kron(I, S) * delta != ee) bad.push_back("antipode");
  if (h.antipode_inv() * S != I || S * h.antipode_inv() != I) bad.push_back("antipode inverse");
  return bad;
}

HopfAlgebra group_algebra(const std::vector<std::vector<Index>>& table, PrimeField f, std::string name) {
  const Index n = table.size();
  if (n == 0) throw Error("group table is empty");
  for (const auto& row : table) {
    if (row.size() != n) throw Error("group table is not square");
    for (Index v : row)
      if (v >= n) throw Error("group table entry out of range");
  }
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      for (Index c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw Error("group table fails associativity at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                      std::to_string(c) + ")");
  std::optional<Index> e;
  for (Index c = 0; c < n && !e; ++c) {
    bool ok = true;
    for (Index g = 0; g < n && ok; ++g) ok = table[c][g] == g && table[g][c] == g;
    if (ok) e = c;
  }
  if (!e) throw Error("group table has no identity element");
  std::vector<Index> inv(n, n);
  for (Index g = 0; g < n; ++g) {
    for (Index x = 0; x < n; ++x)
      if (table[g][x] == *e && table[x][g] == *e) inv[g] = x;
    if (inv[g] == n) throw Error("group table: element " + std::to_string(g) + " has no inverse");
  }

  std::vector<SparseMatrix::Triplet> mul, comul, anti;
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) mul.push_back({table[a][b], a * n + b, 1});
    comul.push_back({a * n + a, a, 1});
    anti.push_back({inv[a], a, 1});
  }
  std::vector<Elem> unit(n, 0), counit(n, 1);
  unit[*e] = 1;
  return HopfAlgebra(f, SparseMatrix::from_triplets(f, n, n * n, mul), unit,
                     SparseMatrix::from_triplets(f, n * n, n, comul), counit, SparseMatrix::from_triplets(f, n, n, anti),
                     std::nullopt, std::move(name));
}

HopfAlgebra cyclic_group_algebra(Index order, PrimeField f) {
  if (order == 0) throw Error("cyclic group order must be positive");
  std::vector<std::vector<Index>> table(order, std::vector<Index>(order));
  for (Index a = 0; a < order; ++a)
    for (Index b = 0; b < order; ++b) table[a][b] = (a + b) % order;
  return group_algebra(table, f, "kZ" + std::to_string(order));
}

HopfAlgebra symmetric_group_s3(PrimeField f) {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const Index n = perms.size();
  std::vector<std::vector<Index>> table(n, std::vector<Index>(n));
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) {
      std::array<int, 3> c{};
      for (int x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
      table[a][b] = std::find(perms.begin(), perms.end(), c) - perms.begin();
    }
  return group_algebra(table, f, "S3");
}

HopfAlgebra sweedler_h4(PrimeField f) {
  if (f.p() == 2) throw Error("sweedler_h4 needs characteristic other than 2");
  const Elem m1 = f.neg(1);
  // basis 0:1 1:g 2:x 3:gx
  const std::vector<SparseMatrix::Triplet> mul{
      {0, 0 * 4 + 0, 1},  {1, 0 * 4 + 1, 1}, {2, 0 * 4 + 2, 1}, {3, 0 * 4 + 3, 1},
      {1, 1 * 4 + 0, 1},  {0, 1 * 4 + 1, 1}, {3, 1 * 4 + 2, 1}, {2, 1 * 4 + 3, 1},
      {2, 2 * 4 + 0, 1},  {3, 2 * 4 + 1, m1},
      {3, 3 * 4 + 0, 1},  {2, 3 * 4 + 1, m1},
  };
  const std::vector<SparseMatrix::Triplet> comul{
      {0 * 4 + 0, 0, 1},
      {1 * 4 + 1, 1, 1},
      {2 * 4 + 0, 2, 1}, {1 * 4 + 2, 2, 1},
      {3 * 4 + 1, 3, 1}, {0 * 4 + 3, 3, 1},
  };
  const std::vector<SparseMatrix::Triplet> anti{{0, 0, 1}, {1, 1, 1}, {3, 2, m1}, {2, 3, 1}};
  return HopfAlgebra(f, SparseMatrix::from_triplets(f, 4, 16, mul), {1, 0, 0, 0},
                     SparseMatrix::from_triplets(f, 16, 4, comul), {1, 1, 0, 0},
                     SparseMatrix::from_triplets(f, 4, 4, anti), std::nullopt, "sweedler");
}

SparseVec multiply_tensor(const HopfAlgebra& h, int k, const SparseVec& a, const SparseVec& b) {
  const PrimeField f = h.field();
  const Index n = h.dim();
  const Index len = checked_power(n, k);
  Accumulator acc(f, len);
  std::vector<Index> da(k), db(k);
  for (const Entry& x : a) {
    Index t = x.index;
    for (int i = k; i-- > 0; t /= n) da[i] = t % n;
    for (const Entry& y : b) {
      Index u = y.index;
      for (int i = k; i-- > 0; u /= n) db[i] = u % n;
      // expand the factorwise product
      SparseVec cur{{0, f.mul(x.value, y.value)}};
      for (int i = 0; i < k; ++i) {
        const SparseVec& pr = h.product(da[i], db[i]);
        SparseVec next;
        for (const Entry& c : cur)
          for (const Entry& d : pr) next.push_back({c.index * n + d.index, f.mul(c.value, d.value)});
        cur = std::move(next);
        if (cur.empty()) break;
      }
      for (const Entry& c : cur) acc.add(c.index, c.value);
    }
  }
  return acc.take();
}

SparseVec multiply(const HopfAlgebra& h, const SparseVec& a, const SparseVec& b) { return multiply_tensor(h, 1, a, b); }

namespace {

bool is_primitive_root(PrimeField f, Elem q, Index n) {
  if (f.pow(q, n) != 1) return false;
  for (Index k = 1; k < n; ++k)
    if (f.pow(q, k) == 1) return false;
  return true;
}

// Bare algebra carrying only the multiplication, enough for multiply_tensor.
HopfAlgebra algebra_only(PrimeField f, SparseMatrix mul, Index n) {
  std::vector<Elem> unit(n, 0), counit(n, 0);
  unit[0] = counit[0] = 1;
  auto id = SparseMatrix::identity(f, n);
  return HopfAlgebra(f, std::move(mul), unit, SparseMatrix::zero(f, n * n, n), counit, id, id);
}

}  // namespace

HopfAlgebra taft(Index n, PrimeField f, Elem q) {
  if (n < 2) throw Error("taft: n must be at least 2");
  q %= f.p();
  if (!is_primitive_root(f, q, n))
    throw Error("taft: " + std::to_string(q) + " is not a primitive " + std::to_string(n) + "-th root of unity mod " +
                std::to_string(f.p()));
  const Index dim = n * n;
  auto idx = [n](Index a, Index b) { return a + n * b; };
  std::vector<SparseMatrix::Triplet> mul;
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      for (Index c = 0; c < n; ++c)
        for (Index d = 0; d < n; ++d)
          if (b + d < n) mul.push_back({idx((a + c) % n, b + d), idx(a, b) * dim + idx(c, d), f.pow(q, b * c)});
  auto alg = algebra_only(f, SparseMatrix::from_triplets(f, dim, dim * dim, mul), dim);

  auto basis = [&](Index a, Index b) { return SparseVec{{idx(a, b), 1}}; };
  const SparseVec one2{{0, 1}};
  const SparseVec dg{{idx(1, 0) * dim + idx(1, 0), 1}};
  SparseVec dx{{idx(0, 1) * dim + idx(0, 0), 1}, {idx(1, 0) * dim + idx(0, 1), 1}};
  std::sort(dx.begin(), dx.end(), [](const Entry& l, const Entry& r) { return l.index < r.index; });
  const SparseVec sg = basis(n - 1, 0);
  const SparseVec sx{{idx(n - 1, 1), f.neg(1)}};

  std::vector<SparseVec> comul(dim), anti(dim);
  std::vector<Elem> unit(dim, 0), counit(dim, 0);
  unit[0] = 1;
  for (Index a = 0; a < n; ++a) {
    SparseVec ga = one2, sga{{0, 1}};
    for (Index i = 0; i < a; ++i) {
      ga = multiply_tensor(alg, 2, ga, dg);
      sga = multiply(alg, sga, sg);
    }
    SparseVec d = ga, s = sga;
    for (Index b = 0; b < n; ++b) {
      comul[idx(a, b)] = d;
      anti[idx(a, b)] = s;
      counit[idx(a, b)] = b == 0 ? 1 : 0;
      d = multiply_tensor(alg, 2, d, dx);
      s = multiply(alg, sx, s);
    }
  }
  return HopfAlgebra(f, alg.mul(), unit, SparseMatrix::from_columns(f, dim * dim, comul), counit,
                     SparseMatrix::from_columns(f, dim, anti), std::nullopt,
                     "taft:" + std::to_string(n) + ":" + std::to_string(q));
}

HopfAlgebra dual(const HopfAlgebra& h) {
  return HopfAlgebra(h.field(), h.comul().transpose(), h.counit(), h.mul().transpose(), h.unit(),
                     h.antipode().transpose(), h.antipode_inv().transpose(), "dual:" + h.name());
}

HopfAlgebra opposite(const HopfAlgebra& h) {
  const Index n = h.dim();
  return HopfAlgebra(h.field(), h.mul() * swap_factors(h.field(), n, n), h.unit(), h.comul(), h.counit(), h.antipode(),
                     h.antipode_inv(), "op:" + h.name());
}

SparseMatrix tensor_identity(const HopfAlgebra& h, int k) {
  if (k < 0) throw Error("tensor_identity: negative power");
  return SparseMatrix::identity(h.field(), checked_power(h.dim(), k));
}

SparseMatrix pad(const HopfAlgebra& h, int i, const SparseMatrix& f, int j) {
  SparseMatrix m = f;
  if (i > 0) m = kron(tensor_identity(h, i), m);
  if (j > 0) m = kron(m, tensor_identity(h, j));
  return m;
}

SparseMatrix iterated_comul(const HopfAlgebra& h, int u) {
  if (u < -1) throw Error("iterated_comul: u must be at least -1");
  if (u == -1) return h.counit_map();
  SparseMatrix m = h.identity();
  for (int k = 1; k <= u; ++k) m = pad(h, 0, h.comul(), k - 1) * m;
  return m;
}

SparseMatrix iterated_mul(const HopfAlgebra& h, int k) {
  if (k < 0) throw Error("iterated_mul: k must be nonnegative");
  if (k == 0) return h.unit_map();
  SparseMatrix m = h.identity();
  for (int j = 2; j <= k; ++j) m = m * pad(h, 0, h.mul(), j - 2);
  return m;
}

}  // namespace hopfcoh
