#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hopfcoh/bimodule.hpp"
#include "hopfcoh/linalg.hpp"

namespace hopfcoh {

/// Cochain complex concentrated in degrees start .. start + dims.size() − 1.
/// d[k] maps degree start+k to start+k+1; fewer differentials than degrees is allowed.
struct CochainComplex {
  PrimeField field;
  int start = 0;
  std::vector<Index> dims;
  std::vector<SparseMatrix> d;

  Index dim(int n) const;
};

/// Names of the failing checks: shapes and d∘d = 0.
std::vector<std::string> verify_complex(const CochainComplex& c);
/// dim H^n for n = 0..n_max; requires d^{n_max} to be stored.
std::vector<Index> cohomology_dims(const CochainComplex& c, int n_max);

enum Constraint : unsigned {
  kLeftModule = 1,
  kRightModule = 2,
  kLeftComodule = 4,
  kRightComodule = 8,
  kHopfBimodule = 15,
};

/// Linear maps src → tgt satisfying the selected intertwining equations.
/// A map f is a tgt.dim × src.dim matrix, vectorized row-major (index r·src.dim + c).
struct ConstrainedHomSpace {
  PrimeField field;
  Index src_dim = 0, tgt_dim = 0;
  unsigned constraints = 0;
  SubspaceBasis basis;

  Index ambient() const { return src_dim * tgt_dim; }
  std::size_t dim() const { return basis.dim(); }
  SparseMatrix map(std::size_t i) const;
  SparseMatrix combine(std::span<const Elem> coords) const;
  /// Coordinates of f; f must lie in the space.
  std::vector<Elem> coordinates(const SparseMatrix& f) const;
  bool contains(const SparseMatrix& f) const;
};

/// Rows of the linear equations on vec(f) expressing the selected constraints.
std::vector<SparseMatrix> intertwining_equations(const HopfBimodule& src, const HopfBimodule& tgt,
                                                 unsigned constraints);
ConstrainedHomSpace constrained_hom_basis(const HopfBimodule& src, const HopfBimodule& tgt, unsigned constraints);
/// Full Hom_k(k^s, k^t).
ConstrainedHomSpace full_hom(PrimeField f, Index src_dim, Index tgt_dim);

/// Cells (p,q) with p+q ≤ bound. Horizontal maps (p,q) → (p,q+1), vertical (p,q) → (p+1,q),
/// both in cell coordinates; stored for source cells with p+q < bound.
struct DoubleComplex {
  PrimeField field;
  int bound = 0;
  std::vector<Index> dims;
  std::vector<SparseMatrix> dh, dc;
  /// Wall-clock seconds spent on the differentials out of each cell.
  std::vector<double> seconds;

  static std::size_t cell(int p, int q) {
    const std::size_t t = static_cast<std::size_t>(p + q);
    return t * (t + 1) / 2 + static_cast<std::size_t>(p);
  }
  static std::size_t cell_count(int bound) { return cell(0, bound + 1); }
  Index dim(int p, int q) const { return p < 0 || q < 0 || p + q > bound ? 0 : dims[cell(p, q)]; }
  const SparseMatrix& horizontal(int p, int q) const { return dh[cell(p, q)]; }
  const SparseMatrix& vertical(int p, int q) const { return dc[cell(p, q)]; }
};

/// Fills a double complex cell by cell (in parallel). dims_of(p,q) gives the cell dimension;
/// horiz(p,q) and vert(p,q) the differentials out of (p,q).
DoubleComplex build_double_complex(PrimeField f, int bound, const std::function<Index(int, int)>& dims_of,
                                   const std::function<SparseMatrix(int, int)>& horiz,
                                   const std::function<SparseMatrix(int, int)>& vert);

/// d_h² = 0, d_c² = 0 and d_h d_c + d_c d_h = 0 on every stored square.
std::vector<std::string> verify_double_complex(const DoubleComplex& dc);
/// Tot^n = ⊕_{p+q=n}, ordered by increasing p; requires bound ≥ n_max + 1.
CochainComplex total_complex(const DoubleComplex& dc, int n_max);
/// Offset of cell (p, n−p) inside Tot^n.
Index total_offset(const DoubleComplex& dc, int p, int n);

/// A linear map Hom_k(S, T) → Hom_k(S2, T2), assembled from terms, acting on row-major vectorized maps.
class HomOperator {
 public:
  HomOperator(PrimeField f, Index s, Index t, Index s2, Index t2);

  /// β ↦ c·y∘β for y: T → T2.
  void left(const SparseMatrix& y, Elem c = 1);
  /// β ↦ c·β∘x for x: S2 → S.
  void right(const SparseMatrix& x, Elem c = 1);
  /// β ↦ c·p∘(1_l⊗β⊗1_r)∘q for q: S2 → l⊗S⊗r and p: l⊗T⊗r → T2.
  void sandwich(const SparseMatrix& p, const SparseMatrix& q, Index l, Index r, Elem c = 1);

  /// (T2·S2) × (T·S).
  SparseMatrix matrix() const;
  /// Evaluates the terms by matrix products.
  SparseMatrix apply(const SparseMatrix& beta) const;

 private:
  struct Term {
    int kind;
    SparseMatrix a, b;
    Index l, r;
    Elem c;
  };
  PrimeField field_;
  Index s_, t_, s2_, t2_;
  std::vector<Term> terms_;
};

/// The operator restricted to src and expressed in tgt coordinates; throws when an image leaves tgt.
SparseMatrix restrict_operator(const HomOperator& op, const ConstrainedHomSpace& src, const ConstrainedHomSpace& tgt);

/// The map between cells: from f: V → W take vec(L∘f∘R) in target-cell coordinates, for every basis
/// map of the source cell. Used to express composition differentials in cell bases.
SparseMatrix induced_map(const ConstrainedHomSpace& src, const ConstrainedHomSpace& tgt,
                         const std::function<SparseMatrix(const SparseMatrix&)>& op);

}  // namespace hopfcoh
