#pragma once

#include <span>
#include <vector>

#include "hopfcoh/field.hpp"

namespace hopfcoh {

struct Entry {
  Index index;
  Elem value;
  friend bool operator==(const Entry&, const Entry&) = default;
};

/// Sorted by index, no stored zeros.
using SparseVec = std::vector<Entry>;

/// Dense scatter buffer with a touched list; the workhorse for sparse accumulation.
class Accumulator {
 public:
  Accumulator(PrimeField f, Index length) : field_(f), values_(length, 0), mark_(length, 0) {}

  void add(Index i, Elem v) {
    if (v == 0) return;
    if (!mark_[i]) {
      mark_[i] = 1;
      touched_.push_back(i);
    }
    values_[i] = field_.add(values_[i], v);
  }
  void axpy(Elem c, const SparseVec& v) {
    if (c == 0) return;
    for (const Entry& e : v) add(e.index, field_.mul(c, e.value));
  }
  /// Emits the sorted nonzero entries and resets the buffer.
  SparseVec take();
  Index length() const { return values_.size(); }

 private:
  PrimeField field_;
  std::vector<Elem> values_;
  std::vector<unsigned char> mark_;
  std::vector<Index> touched_;
};

/// Column-major sparse matrix over F_p. Column j holds the image of basis vector j.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(PrimeField f, Index rows, Index cols);

  static SparseMatrix identity(PrimeField f, Index n);
  static SparseMatrix zero(PrimeField f, Index rows, Index cols) { return SparseMatrix(f, rows, cols); }
  struct Triplet {
    Index row;
    Index col;
    Elem value;
  };
  /// Duplicate positions are summed.
  static SparseMatrix from_triplets(PrimeField f, Index rows, Index cols, std::span<const Triplet> triplets);
  static SparseMatrix from_dense(PrimeField f, const std::vector<std::vector<std::int64_t>>& rows);
  static SparseMatrix from_columns(PrimeField f, Index rows, std::vector<SparseVec> columns);

  PrimeField field() const { return field_; }
  Index rows() const { return rows_; }
  Index cols() const { return cols_.size(); }
  Index nnz() const;

  const SparseVec& column(Index j) const { return cols_[j]; }
  const std::vector<SparseVec>& columns() const { return cols_; }
  void set_column(Index j, SparseVec v);
  Elem at(Index r, Index c) const;

  bool is_zero() const;
  SparseMatrix transpose() const;
  SparseVec apply(const SparseVec& v) const;
  std::vector<Elem> apply_dense(std::span<const Elem> v) const;
  /// Row-major dense copy; only for small matrices.
  std::vector<std::vector<Elem>> to_dense() const;

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b);

 private:
  PrimeField field_;
  Index rows_ = 0;
  std::vector<SparseVec> cols_;
};

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix scale(Elem c, const SparseMatrix& a);
/// Tensor product of maps, rightmost factor varying fastest.
SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix kron(std::span<const SparseMatrix> factors);
SparseMatrix vstack(std::span<const SparseMatrix> blocks);
SparseMatrix hstack(std::span<const SparseMatrix> blocks);
SparseMatrix direct_sum(const SparseMatrix& a, const SparseMatrix& b);

/// Permutation of tensor factors: factor k of the source (dims[k]) lands at position perm[k].
SparseMatrix tensor_permutation(PrimeField f, std::span<const Index> dims, std::span<const std::size_t> perm);
/// Swap of two tensor factors V⊗W -> W⊗V.
SparseMatrix swap_factors(PrimeField f, Index dim_v, Index dim_w);

Index checked_power(Index base, unsigned exponent);
Index checked_product(Index a, Index b);

SparseVec sparse_from_dense(std::span<const Elem> dense);
std::vector<Elem> dense_from_sparse(const SparseVec& v, Index length);
SparseVec sparse_axpy(PrimeField f, const SparseVec& x, Elem c, const SparseVec& y);  // x + c*y

/// Row-major vectorization of a map W×V: index r*V + c.
SparseVec vectorize(const SparseMatrix& m);
SparseMatrix unvectorize(PrimeField f, const SparseVec& v, Index rows, Index cols);

}  // namespace hopfcoh
