#include "hopfcoh/sparse.hpp"

#include <algorithm>
#include <limits>

namespace hopfcoh {

SparseVec Accumulator::take() {
  std::sort(touched_.begin(), touched_.end());
  SparseVec out;
  out.reserve(touched_.size());
  for (Index i : touched_) {
    if (values_[i] != 0) out.push_back({i, values_[i]});
    values_[i] = 0;
    mark_[i] = 0;
  }
  touched_.clear();
  return out;
}

Index checked_product(Index a, Index b) {
  if (a != 0 && b > std::numeric_limits<Index>::max() / a) throw Error("index arithmetic overflow");
  return a * b;
}

Index checked_power(Index base, unsigned exponent) {
  Index r = 1;
  for (unsigned i = 0; i < exponent; ++i) r = checked_product(r, base);
  return r;
}

SparseMatrix::SparseMatrix(PrimeField f, Index rows, Index cols) : field_(f), rows_(rows), cols_(cols) {}

SparseMatrix SparseMatrix::identity(PrimeField f, Index n) {
  SparseMatrix m(f, n, n);
  for (Index i = 0; i < n; ++i) m.cols_[i] = {{i, 1}};
  return m;
}

SparseMatrix SparseMatrix::from_triplets(PrimeField f, Index rows, Index cols, std::span<const Triplet> triplets) {
  std::vector<std::vector<Triplet>> by_col(cols);
  for (const Triplet& t : triplets) {
    if (t.row >= rows || t.col >= cols) throw Error("triplet index out of range");
    by_col[t.col].push_back(t);
  }
  SparseMatrix m(f, rows, cols);
  for (Index c = 0; c < cols; ++c) {
    auto& ts = by_col[c];
    std::sort(ts.begin(), ts.end(), [](const Triplet& a, const Triplet& b) { return a.row < b.row; });
    SparseVec col;
    for (const Triplet& t : ts) {
      Elem v = t.value % f.p();
      if (!col.empty() && col.back().index == t.row)
        col.back().value = f.add(col.back().value, v);
      else
        col.push_back({t.row, v});
    }
    std::erase_if(col, [](const Entry& e) { return e.value == 0; });
    m.cols_[c] = std::move(col);
  }
  return m;
}

SparseMatrix SparseMatrix::from_dense(PrimeField f, const std::vector<std::vector<std::int64_t>>& rows) {
  Index r = rows.size();
  Index c = r ? rows[0].size() : 0;
  SparseMatrix m(f, r, c);
  for (Index j = 0; j < c; ++j)
    for (Index i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw Error("ragged dense matrix");
      Elem v = f.from_int(rows[i][j]);
      if (v) m.cols_[j].push_back({i, v});
    }
  return m;
}

SparseMatrix SparseMatrix::from_columns(PrimeField f, Index rows, std::vector<SparseVec> columns) {
  SparseMatrix m(f, rows, 0);
  m.cols_ = std::move(columns);
  for (const auto& col : m.cols_)
    if (!col.empty() && col.back().index >= rows) throw Error("column entry out of range");
  return m;
}

Index SparseMatrix::nnz() const {
  Index n = 0;
  for (const auto& c : cols_) n += c.size();
  return n;
}

void SparseMatrix::set_column(Index j, SparseVec v) {
  if (!v.empty() && v.back().index >= rows_) throw Error("column entry out of range");
  cols_[j] = std::move(v);
}

Elem SparseMatrix::at(Index r, Index c) const {
  const auto& col = cols_[c];
  auto it = std::lower_bound(col.begin(), col.end(), r, [](const Entry& e, Index i) { return e.index < i; });
  return (it != col.end() && it->index == r) ? it->value : 0;
}

bool SparseMatrix::is_zero() const {
  return std::all_of(cols_.begin(), cols_.end(), [](const SparseVec& c) { return c.empty(); });
}

SparseMatrix SparseMatrix::transpose() const {
  std::vector<SparseVec> t(rows_);
  for (Index c = 0; c < cols(); ++c)
    for (const Entry& e : cols_[c]) t[e.index].push_back({c, e.value});
  return from_columns(field_, cols(), std::move(t));
}

SparseVec SparseMatrix::apply(const SparseVec& v) const {
  Accumulator acc(field_, rows_);
  for (const Entry& e : v) acc.axpy(e.value, cols_[e.index]);
  return acc.take();
}

std::vector<Elem> SparseMatrix::apply_dense(std::span<const Elem> v) const {
  if (v.size() != cols()) throw Error("apply_dense: length mismatch");
  std::vector<Elem> out(rows_, 0);
  for (Index c = 0; c < cols(); ++c) {
    if (v[c] == 0) continue;
    for (const Entry& e : cols_[c]) out[e.index] = field_.add(out[e.index], field_.mul(v[c], e.value));
  }
  return out;
}

std::vector<std::vector<Elem>> SparseMatrix::to_dense() const {
  std::vector<std::vector<Elem>> d(rows_, std::vector<Elem>(cols(), 0));
  for (Index c = 0; c < cols(); ++c)
    for (const Entry& e : cols_[c]) d[e.index][c] = e.value;
  return d;
}

bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols() != b.rows()) throw Error("matrix product: dimension mismatch");
  if (!(a.field() == b.field())) throw Error("matrix product: field mismatch");
  PrimeField f = a.field();
  std::vector<SparseVec> out(b.cols());
  Accumulator acc(f, a.rows());
  for (Index j = 0; j < b.cols(); ++j) {
    for (const Entry& e : b.column(j)) acc.axpy(e.value, a.column(e.index));
    out[j] = acc.take();
  }
  return SparseMatrix::from_columns(f, a.rows(), std::move(out));
}

SparseVec sparse_axpy(PrimeField f, const SparseVec& x, Elem c, const SparseVec& y) {
  SparseVec out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].index < y[j].index)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].index < x[i].index) {
      Elem v = f.mul(c, y[j].value);
      if (v) out.push_back({y[j].index, v});
      ++j;
    } else {
      Elem v = f.add(x[i].value, f.mul(c, y[j].value));
      if (v) out.push_back({x[i].index, v});
      ++i;
      ++j;
    }
  }
  return out;
}

namespace {

SparseMatrix combine(const SparseMatrix& a, const SparseMatrix& b, Elem c) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error("matrix sum: dimension mismatch");
  if (!(a.field() == b.field())) throw Error("matrix sum: field mismatch");
  std::vector<SparseVec> out(a.cols());
  for (Index j = 0; j < a.cols(); ++j) out[j] = sparse_axpy(a.field(), a.column(j), c, b.column(j));
  return SparseMatrix::from_columns(a.field(), a.rows(), std::move(out));
}

}  // namespace

SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) { return combine(a, b, 1); }
SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) { return combine(a, b, a.field().neg(1)); }

SparseMatrix scale(Elem c, const SparseMatrix& a) {
  PrimeField f = a.field();
  c %= f.p();
  std::vector<SparseVec> out(a.cols());
  if (c != 0)
    for (Index j = 0; j < a.cols(); ++j) {
      out[j] = a.column(j);
      for (Entry& e : out[j]) e.value = f.mul(c, e.value);
    }
  return SparseMatrix::from_columns(f, a.rows(), std::move(out));
}

SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b) {
  if (!(a.field() == b.field())) throw Error("kron: field mismatch");
  PrimeField f = a.field();
  Index rows = checked_product(a.rows(), b.rows());
  Index cols = checked_product(a.cols(), b.cols());
  std::vector<SparseVec> out(cols);
  for (Index ja = 0; ja < a.cols(); ++ja)
    for (Index jb = 0; jb < b.cols(); ++jb) {
      SparseVec& col = out[ja * b.cols() + jb];
      col.reserve(a.column(ja).size() * b.column(jb).size());
      for (const Entry& ea : a.column(ja))
        for (const Entry& eb : b.column(jb)) col.push_back({ea.index * b.rows() + eb.index, f.mul(ea.value, eb.value)});
    }
  return SparseMatrix::from_columns(f, rows, std::move(out));
}

SparseMatrix kron(std::span<const SparseMatrix> factors) {
  if (factors.empty()) throw Error("kron of an empty list needs a field; use identity(1)");
  SparseMatrix r = factors[0];
  for (std::size_t i = 1; i < factors.size(); ++i) r = kron(r, factors[i]);
  return r;
}

SparseMatrix vstack(std::span<const SparseMatrix> blocks) {
  if (blocks.empty()) throw Error("vstack of nothing");
  Index cols = blocks[0].cols();
  Index rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw Error("vstack: column mismatch");
    rows += b.rows();
  }
  std::vector<SparseVec> out(cols);
  Index offset = 0;
  for (const auto& b : blocks) {
    for (Index j = 0; j < cols; ++j)
      for (const Entry& e : b.column(j)) out[j].push_back({e.index + offset, e.value});
    offset += b.rows();
  }
  return SparseMatrix::from_columns(blocks[0].field(), rows, std::move(out));
}

SparseMatrix hstack(std::span<const SparseMatrix> blocks) {
  if (blocks.empty()) throw Error("hstack of nothing");
  Index rows = blocks[0].rows();
  std::vector<SparseVec> out;
  for (const auto& b : blocks) {
    if (b.rows() != rows) throw Error("hstack: row mismatch");
    out.insert(out.end(), b.columns().begin(), b.columns().end());
  }
  return SparseMatrix::from_columns(blocks[0].field(), rows, std::move(out));
}

SparseMatrix direct_sum(const SparseMatrix& a, const SparseMatrix& b) {
  std::vector<SparseVec> out(a.cols() + b.cols());
  for (Index j = 0; j < a.cols(); ++j) out[j] = a.column(j);
  for (Index j = 0; j < b.cols(); ++j)
    for (const Entry& e : b.column(j)) out[a.cols() + j].push_back({e.index + a.rows(), e.value});
  return SparseMatrix::from_columns(a.field(), a.rows() + b.rows(), std::move(out));
}

SparseMatrix tensor_permutation(PrimeField f, std::span<const Index> dims, std::span<const std::size_t> perm) {
  const std::size_t k = dims.size();
  if (perm.size() != k) throw Error("tensor_permutation: arity mismatch");
  std::vector<Index> target_dims(k);
  for (std::size_t i = 0; i < k; ++i) target_dims[perm[i]] = dims[i];
  Index total = 1;
  for (Index d : dims) total = checked_product(total, d);
  std::vector<Index> stride(k, 1);
  for (std::size_t i = k; i-- > 1;) stride[i - 1] = stride[i] * target_dims[i];
  std::vector<SparseVec> out(total);
  std::vector<Index> digit(k, 0);
  for (Index src = 0; src < total; ++src) {
    Index dst = 0;
    for (std::size_t i = 0; i < k; ++i) dst += digit[i] * stride[perm[i]];
    out[src] = {{dst, 1}};
    for (std::size_t i = k; i-- > 0;) {
      if (++digit[i] < dims[i]) break;
      digit[i] = 0;
    }
  }
  return SparseMatrix::from_columns(f, total, std::move(out));
}

SparseMatrix swap_factors(PrimeField f, Index dim_v, Index dim_w) {
  const Index dims[2] = {dim_v, dim_w};
  const std::size_t perm[2] = {1, 0};
  return tensor_permutation(f, dims, perm);
}

SparseVec sparse_from_dense(std::span<const Elem> dense) {
  SparseVec v;
  for (Index i = 0; i < dense.size(); ++i)
    if (dense[i]) v.push_back({i, dense[i]});
  return v;
}

std::vector<Elem> dense_from_sparse(const SparseVec& v, Index length) {
  std::vector<Elem> d(length, 0);
  for (const Entry& e : v) d[e.index] = e.value;
  return d;
}

SparseVec vectorize(const SparseMatrix& m) {
  SparseVec v;
  v.reserve(m.nnz());
  for (Index c = 0; c < m.cols(); ++c)
    for (const Entry& e : m.column(c)) v.push_back({e.index * m.cols() + c, e.value});
  std::sort(v.begin(), v.end(), [](const Entry& a, const Entry& b) { return a.index < b.index; });
  return v;
}

SparseMatrix unvectorize(PrimeField f, const SparseVec& v, Index rows, Index cols) {
  std::vector<SparseVec> out(cols);
  for (const Entry& e : v) {
    Index r = e.index / cols;
    if (r >= rows) throw Error("unvectorize: index out of range");
    out[e.index % cols].push_back({r, e.value});
  }
  return SparseMatrix::from_columns(f, rows, std::move(out));
}

}  // namespace hopfcoh
