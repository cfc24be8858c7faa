#include "hopfcoh/linalg.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <string>

#include "hopfcoh/simd.hpp"

namespace hopfcoh {

namespace {

Index initial_guard() {
  if (const char* env = std::getenv("HOPFCOH_MEMORY_GUARD")) {
    try {
      return static_cast<Index>(std::stoull(env));
    } catch (...) {
    }
  }
  return 500000;
}

std::atomic<Index>& guard_value() {
  static std::atomic<Index> g{initial_guard()};
  return g;
}

}  // namespace

Index memory_guard() { return guard_value().load(); }
void set_memory_guard(Index limit) { guard_value().store(limit); }

void check_memory_guard(Index required, const std::string& what) {
  Index limit = memory_guard();
  if (required > limit)
    throw ResourceGuardError(what + ": ambient dimension " + std::to_string(required) + " exceeds memory guard " +
                                 std::to_string(limit),
                             required, limit);
}

// ---------------------------------------------------------------------------
// SubspaceBasis

std::vector<Elem> SubspaceBasis::coordinates(const SparseVec& v) const {
  std::vector<Elem> coords(vectors.size(), 0);
  // pivots are increasing, as is v.
  std::size_t k = 0;
  for (const Entry& e : v) {
    while (k < pivots.size() && pivots[k] < e.index) ++k;
    if (k == pivots.size()) break;
    if (pivots[k] == e.index) coords[k] = e.value;
  }
  return coords;
}

SparseVec SubspaceBasis::combine(PrimeField f, std::span<const Elem> coords) const {
  if (coords.size() != vectors.size()) throw Error("SubspaceBasis::combine: coordinate count mismatch");
  Accumulator acc(f, length);
  for (std::size_t i = 0; i < coords.size(); ++i) acc.axpy(coords[i], vectors[i]);
  return acc.take();
}

SparseMatrix SubspaceBasis::as_matrix(PrimeField f) const { return SparseMatrix::from_columns(f, length, vectors); }

// ---------------------------------------------------------------------------
// RowEchelon

RowEchelon::RowEchelon(PrimeField f, Index length)
    : field_(f), length_(length), row_of_pivot_(length, -1), acc_(length, 0), in_heap_(length, 0) {}

SparseVec RowEchelon::reduce(const SparseVec& v) {
  auto cmp = std::greater<Index>();
  heap_.clear();
  for (const Entry& e : v) {
    if (e.index >= length_) throw Error("RowEchelon: vector entry out of range");
    acc_[e.index] = e.value;
    in_heap_[e.index] = 1;
    heap_.push_back(e.index);
  }
  std::make_heap(heap_.begin(), heap_.end(), cmp);
  SparseVec out;
  while (!heap_.empty()) {
    std::pop_heap(heap_.begin(), heap_.end(), cmp);
    Index i = heap_.back();
    heap_.pop_back();
    in_heap_[i] = 0;
    Elem a = acc_[i];
    acc_[i] = 0;
    if (a == 0) continue;
    std::int64_t r = row_of_pivot_[i];
    if (r < 0) {
      out.push_back({i, a});
      continue;
    }
    Elem m = field_.neg(a);
    const SparseVec& row = rows_[static_cast<std::size_t>(r)];
    for (std::size_t k = 1; k < row.size(); ++k) {
      Index j = row[k].index;
      acc_[j] = field_.add(acc_[j], field_.mul(m, row[k].value));
      if (!in_heap_[j]) {
        in_heap_[j] = 1;
        heap_.push_back(j);
        std::push_heap(heap_.begin(), heap_.end(), cmp);
      }
    }
  }
  return out;
}

bool RowEchelon::insert(const SparseVec& v) {
  if (rank() == length_) return false;
  SparseVec r = reduce(v);
  if (r.empty()) return false;
  Elem lead_inv = field_.inv(r.front().value);
  for (Entry& e : r) e.value = field_.mul(e.value, lead_inv);
  row_of_pivot_[r.front().index] = static_cast<std::int64_t>(rows_.size());
  rows_.push_back(std::move(r));
  fully_reduced_ = false;
  return true;
}

void RowEchelon::full_reduce() {
  if (fully_reduced_) return;
  std::vector<std::size_t> order(rows_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return rows_[a].front().index > rows_[b].front().index; });
  Accumulator acc(field_, length_);
  for (std::size_t idx : order) {
    SparseVec& row = rows_[idx];
    bool touched = false;
    for (std::size_t k = 1; k < row.size(); ++k)
      if (row_of_pivot_[row[k].index] >= 0) {
        touched = true;
        break;
      }
    if (!touched) continue;
    for (const Entry& e : row) {
      acc.add(e.index, e.value);
      std::int64_t r = row_of_pivot_[e.index];
      if (r >= 0 && static_cast<std::size_t>(r) != idx) acc.axpy(field_.neg(e.value), rows_[static_cast<std::size_t>(r)]);
    }
    row = acc.take();
  }
  fully_reduced_ = true;
}

SubspaceBasis RowEchelon::nullspace() {
  full_reduce();
  SubspaceBasis basis;
  basis.length = length_;
  std::vector<std::int64_t> slot(length_, -1);
  for (Index c = 0; c < length_; ++c)
    if (row_of_pivot_[c] < 0) {
      slot[c] = static_cast<std::int64_t>(basis.pivots.size());
      basis.pivots.push_back(c);
    }
  basis.vectors.assign(basis.pivots.size(), {});
  for (std::size_t k = 0; k < basis.pivots.size(); ++k) basis.vectors[k].push_back({basis.pivots[k], 1});
  for (const SparseVec& row : rows_) {
    Index c = row.front().index;
    for (std::size_t k = 1; k < row.size(); ++k)
      basis.vectors[static_cast<std::size_t>(slot[row[k].index])].push_back({c, field_.neg(row[k].value)});
  }
  for (auto& v : basis.vectors)
    std::sort(v.begin(), v.end(), [](const Entry& a, const Entry& b) { return a.index < b.index; });
  return basis;
}

SubspaceBasis RowEchelon::rowspace() {
  full_reduce();
  SubspaceBasis basis;
  basis.length = length_;
  basis.vectors = rows_;
  std::sort(basis.vectors.begin(), basis.vectors.end(),
            [](const SparseVec& a, const SparseVec& b) { return a.front().index < b.front().index; });
  for (const auto& v : basis.vectors) basis.pivots.push_back(v.front().index);
  return basis;
}

// ---------------------------------------------------------------------------
// DenseMatrix

DenseMatrix::DenseMatrix(PrimeField f, Index rows, Index cols)
    : field_(f), rows_(rows), cols_(cols), stride_((cols + 7) / 8 * 8), data_(rows * stride_, 0), bound_(rows, 0) {
  for (auto& b : bound_) b = f.p() - 1;
}

DenseMatrix DenseMatrix::from_sparse(const SparseMatrix& m) {
  DenseMatrix d(m.field(), m.rows(), m.cols());
  for (Index c = 0; c < m.cols(); ++c)
    for (const Entry& e : m.column(c)) d.row(e.index)[c] = e.value;
  return d;
}

void DenseMatrix::reduce_row(Index r) {
  if (bound_[r] >= field_.p()) simd::kernels().reduce(row(r), cols_, field_.p());
  bound_[r] = field_.p() - 1;
}

std::vector<Index> DenseMatrix::eliminate(bool full) {
  const auto& k = simd::kernels();
  const std::uint64_t p = field_.p();
  const std::uint64_t step = (p - 1) * (p - 1);
  const std::uint64_t limit = std::uint64_t{1} << 31;
  const bool lazy = step + p < limit;
  std::vector<Index> pivots;
  Index r = 0;
  for (Index c = 0; c < cols_ && r < rows_; ++c) {
    Index found = rows_;
    for (Index i = r; i < rows_; ++i)
      if (row(i)[c] % p) {
        found = i;
        break;
      }
    if (found == rows_) continue;
    if (found != r) {
      std::swap_ranges(row(found), row(found) + stride_, row(r));
      std::swap(bound_[found], bound_[r]);
    }
    reduce_row(r);
    Elem inv = field_.inv(row(r)[c]);
    if (inv != 1) k.scale_mod(row(r) + c, inv, cols_ - c, field_.spec().characteristic);
    const std::uint32_t* prow = row(r) + c;
    const Index len = cols_ - c;
    for (Index i = full ? 0 : r + 1; i < rows_; ++i) {
      if (i == r) continue;
      Elem a = static_cast<Elem>(row(i)[c] % p);
      if (a == 0) continue;
      Elem m = static_cast<Elem>(p - a);
      if (lazy) {
        if (bound_[i] + step >= limit) reduce_row(i);
        k.axpy_lazy(row(i) + c, prow, m, len);
        bound_[i] += step;
      } else {
        reduce_row(i);
        k.axpy_mod(row(i) + c, prow, m, len, static_cast<std::uint32_t>(p));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  for (Index i = 0; i < rows_; ++i) reduce_row(i);
  return pivots;
}

std::vector<Index> DenseMatrix::rref() { return eliminate(true); }
std::vector<Index> DenseMatrix::echelon() { return eliminate(false); }

// ---------------------------------------------------------------------------
// Front end

namespace {

// Dense elimination pays off once the matrix is not very sparse and fits comfortably.
bool prefer_dense(Index rows, Index cols, Index nnz) {
  const double cells = static_cast<double>(rows) * static_cast<double>(cols);
  if (cells == 0) return false;
  if (cells <= 4096) return true;
  return cells <= 6.0e7 && static_cast<double>(nnz) / cells > 0.05;
}

SubspaceBasis dense_kernel(const SparseMatrix& m) {
  DenseMatrix d = DenseMatrix::from_sparse(m);
  std::vector<Index> piv = d.rref();
  PrimeField f = m.field();
  SubspaceBasis basis;
  basis.length = m.cols();
  std::vector<char> is_pivot(m.cols(), 0);
  for (Index c : piv) is_pivot[c] = 1;
  for (Index c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    SparseVec v;
    for (std::size_t r = 0; r < piv.size(); ++r) {
      Elem a = d.get(r, c);
      if (a) v.push_back({piv[r], f.neg(a)});
    }
    v.push_back({c, 1});
    std::sort(v.begin(), v.end(), [](const Entry& a, const Entry& b) { return a.index < b.index; });
    basis.vectors.push_back(std::move(v));
    basis.pivots.push_back(c);
  }
  return basis;
}

}  // namespace

Index rank(const SparseMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if (prefer_dense(m.rows(), m.cols(), m.nnz())) {
    if (m.rows() >= m.cols()) {
      DenseMatrix d = DenseMatrix::from_sparse(m.transpose());
      return d.echelon().size();
    }
    DenseMatrix d = DenseMatrix::from_sparse(m);
    return d.echelon().size();
  }
  // Stream the longer side as vectors whose length is the shorter side.
  if (m.rows() >= m.cols()) {
    SparseMatrix t = m.transpose();
    RowEchelon e(m.field(), m.cols());
    for (const auto& row : t.columns())
      if (e.insert(row) && e.rank() == m.cols()) break;
    return e.rank();
  }
  RowEchelon e(m.field(), m.rows());
  for (const auto& col : m.columns())
    if (e.insert(col) && e.rank() == m.rows()) break;
  return e.rank();
}

SubspaceBasis kernel_basis(const SparseMatrix& m) {
  if (m.rows() > 0 && m.cols() > 0 && prefer_dense(m.rows(), m.cols(), m.nnz())) return dense_kernel(m);
  RowEchelon e(m.field(), m.cols());
  SparseMatrix t = m.transpose();
  for (const auto& row : t.columns())
    if (e.insert(row) && e.rank() == m.cols()) break;
  return e.nullspace();
}

SubspaceBasis stacked_kernel(std::span<const SparseMatrix> ms, Index cols) {
  if (ms.empty()) {
    SubspaceBasis basis;
    basis.length = cols;
    for (Index c = 0; c < cols; ++c) {
      basis.vectors.push_back({{c, 1}});
      basis.pivots.push_back(c);
    }
    return basis;
  }
  RowEchelon e(ms.front().field(), cols);
  for (const SparseMatrix& m : ms) {
    if (m.cols() != cols) throw Error("stacked_kernel: column count mismatch");
    SparseMatrix t = m.transpose();
    for (const auto& row : t.columns()) {
      e.insert(row);
      if (e.rank() == cols) return e.nullspace();
    }
  }
  return e.nullspace();
}

std::optional<std::vector<Elem>> solve(const SparseMatrix& m, std::span<const Elem> b) {
  if (b.size() != m.rows()) throw Error("solve: right-hand side length mismatch");
  PrimeField f = m.field();
  const Index n = m.cols();
  RowEchelon e(f, n + 1);
  SparseMatrix t = m.transpose();
  for (Index r = 0; r < m.rows(); ++r) {
    SparseVec row = t.column(r);
    if (b[r] % f.p()) row.push_back({n, static_cast<Elem>(b[r] % f.p())});
    e.insert(row);
  }
  SubspaceBasis rows = e.rowspace();
  std::vector<Elem> x(n, 0);
  for (std::size_t k = 0; k < rows.vectors.size(); ++k) {
    const SparseVec& row = rows.vectors[k];
    if (rows.pivots[k] == n) return std::nullopt;
    // Fully reduced with free variables set to zero: x_pivot = rhs.
    if (row.back().index == n) x[rows.pivots[k]] = row.back().value;
  }
  return x;
}

SubspaceBasis column_space(const SparseMatrix& m) {
  RowEchelon e(m.field(), m.rows());
  for (const auto& col : m.columns()) e.insert(col);
  return e.rowspace();
}

SparseMatrix inverse(const SparseMatrix& m) {
  if (m.rows() != m.cols()) throw Error("inverse of a non-square matrix");
  const Index n = m.rows();
  PrimeField f = m.field();
  DenseMatrix d(f, n, 2 * n);
  for (Index c = 0; c < n; ++c)
    for (const Entry& e : m.column(c)) d.set(e.index, c, e.value);
  for (Index i = 0; i < n; ++i) d.set(i, n + i, 1);
  auto piv = d.rref();
  if (piv.size() < n || piv[n - 1] != n - 1) throw Error("matrix is singular");
  std::vector<SparseVec> cols(n);
  for (Index c = 0; c < n; ++c)
    for (Index r = 0; r < n; ++r)
      if (Elem v = d.get(r, n + c)) cols[c].push_back({r, v});
  return SparseMatrix::from_columns(f, n, std::move(cols));
}

}  // namespace hopfcoh
