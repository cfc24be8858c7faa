#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hopfcoh/sparse.hpp"

namespace hopfcoh {

/// Ambient Hom-dimension limit shared by every constrained construction.
/// Defaults to 5e5, or HOPFCOH_MEMORY_GUARD when set.
Index memory_guard();
void set_memory_guard(Index limit);
/// Throws ResourceGuardError naming `what` when required exceeds the guard.
void check_memory_guard(Index required, const std::string& what);

/// A kernel (or any subspace) basis in reduced form: vector i is 1 at pivots[i]
/// and 0 at every other pivot, so coordinates of a member are read off directly.
struct SubspaceBasis {
  Index length = 0;
  std::vector<SparseVec> vectors;
  std::vector<Index> pivots;

  std::size_t dim() const { return vectors.size(); }
  /// Coordinates of v, assuming v lies in the span.
  std::vector<Elem> coordinates(const SparseVec& v) const;
  SparseVec combine(PrimeField f, std::span<const Elem> coords) const;
  /// Basis vectors as the columns of a length × dim matrix.
  SparseMatrix as_matrix(PrimeField f) const;
};

/// Semi-echelon form over F_p built by streaming sparse vectors. Pivot rows are
/// normalized to leading coefficient 1 and stored sparsely.
class RowEchelon {
 public:
  RowEchelon(PrimeField f, Index length);

  /// Reduces v against the current pivots; returns true when v was independent.
  bool insert(const SparseVec& v);
  /// Reduction of v against the pivots (zero iff v lies in the row space).
  SparseVec reduce(const SparseVec& v);
  Index rank() const { return rows_.size(); }
  Index length() const { return length_; }
  /// Basis of {x : r·x = 0 for every inserted row r}.
  SubspaceBasis nullspace();
  /// Reduced row-echelon basis of the row space.
  SubspaceBasis rowspace();

 private:
  void full_reduce();
  PrimeField field_;
  Index length_;
  std::vector<SparseVec> rows_;
  std::vector<std::int64_t> row_of_pivot_;
  bool fully_reduced_ = false;
  // scratch
  std::vector<Elem> acc_;
  std::vector<unsigned char> in_heap_;
  std::vector<Index> heap_;
};

/// Dense row-major matrix over F_p with lazy reduction, driven by the SIMD kernels.
class DenseMatrix {
 public:
  DenseMatrix(PrimeField f, Index rows, Index cols);
  static DenseMatrix from_sparse(const SparseMatrix& m);

  Index rows() const { return rows_; }
  Index cols() const { return cols_; }
  std::uint32_t* row(Index r) { return data_.data() + r * stride_; }
  const std::uint32_t* row(Index r) const { return data_.data() + r * stride_; }
  Elem get(Index r, Index c) const { return row(r)[c] % field_.p(); }
  void set(Index r, Index c, Elem v) { row(r)[c] = v; }

  /// In-place reduced row-echelon form; returns the pivot columns.
  std::vector<Index> rref();
  /// In-place row-echelon form (no back elimination); returns the pivot columns.
  std::vector<Index> echelon();

 private:
  std::vector<Index> eliminate(bool full);
  void reduce_row(Index r);
  PrimeField field_;
  Index rows_, cols_, stride_;
  std::vector<std::uint32_t> data_;
  std::vector<std::uint64_t> bound_;
};

Index rank(const SparseMatrix& m);
/// Basis of ker m; each vector v satisfies m·v = 0 and there are cols − rank of them.
SubspaceBasis kernel_basis(const SparseMatrix& m);
/// Some x with m·x = b, or nullopt when inconsistent.
std::optional<std::vector<Elem>> solve(const SparseMatrix& m, std::span<const Elem> b);
/// Intersection of kernels of matrices sharing `cols` columns; no matrices gives the full space.
SubspaceBasis stacked_kernel(std::span<const SparseMatrix> ms, Index cols);
/// Basis of the column span of m, in reduced form.
SubspaceBasis column_space(const SparseMatrix& m);
/// Inverse of a square matrix; throws when singular.
SparseMatrix inverse(const SparseMatrix& m);

}  // namespace hopfcoh
