#pragma once

#include <cstdint>
#include <vector>

#include "hopfcoh/bimodule.hpp"

namespace hopfcoh {

/// The algebra X = (A*ᵒᵖ⊗A*)⊗(A⊗Aᵒᵖ) whose left modules are the Hopf bimodules over A.
///
/// Basis (i,j,k,l) ↔ e_i*⊗e_j*⊗e_k⊗e_l at index i·n³ + j·n² + k·n + l.
/// The straightening table for (1⊗1⊗e_k⊗e_l)(e_i*⊗e_j*⊗1⊗1) is built once; products are
/// expanded from it on demand. Immutable after construction.
class XAlgebra {
 public:
  explicit XAlgebra(AlgebraPtr base);

  const AlgebraPtr& base() const { return base_; }
  const HopfAlgebra& dual_algebra() const { return dual_; }
  PrimeField field() const { return base_->field(); }
  Index n() const { return n_; }
  Index dim() const { return dim_; }

  Index index(Index i, Index j, Index k, Index l) const { return ((i * n_ + j) * n_ + k) * n_ + l; }
  /// The tensor l⊗k⊗a⊗b of coefficient vectors (dual, dual, A, A).
  SparseVec element(const SparseVec& l, const SparseVec& k, const SparseVec& a, const SparseVec& b) const;
  /// ε⊗ε⊗1⊗1.
  SparseVec unit() const;
  /// ε as a vector on the dual basis.
  SparseVec counit_vector() const;
  SparseVec unit_vector() const;

  /// Product of basis elements.
  SparseVec product(Index x, Index y) const;
  SparseVec multiply(const SparseVec& x, const SparseVec& y) const;
  /// (1⊗1⊗e_a⊗e_b)(e_i*⊗e_j*⊗1⊗1), as printed.
  const SparseVec& straighten(Index a, Index b, Index i, Index j) const {
    return straighten_[((a * n_ + b) * n_ + i) * n_ + j];
  }
  /// Full multiplication map, dim × dim²; guarded.
  SparseMatrix mul_matrix() const;

 private:
  AlgebraPtr base_;
  HopfAlgebra dual_;
  Index n_ = 0, dim_ = 0;
  std::vector<SparseVec> straighten_;
};

/// Left X-module: action is dim × (X.dim·dim), column x·dim + v holds x·e_v.
struct XModule {
  Index dim = 0;
  SparseMatrix action;
};

/// Applies an element of X to a vector of the module.
SparseVec act(const XAlgebra& x, const XModule& v, const SparseVec& elem, const SparseVec& vec);

/// Checks unit and associativity of the action. Exhaustive when exhaustive_limit ≥ X.dim² · dim,
/// otherwise `samples` seeded random triples.
std::vector<std::string> verify_xmodule(const XAlgebra& x, const XModule& v, std::uint64_t seed = 1,
                                        int samples = 1000, Index exhaustive_limit = 1u << 16);
/// Associativity failures of X; exhaustive when samples < 0, otherwise seeded random triples. Also checks the unit.
std::vector<std::string> verify_x_associativity(const XAlgebra& x, int samples, std::uint64_t seed = 1);

XModule bimodule_to_xmodule(const HopfBimodule& m, const XAlgebra& x);
/// Throws unless the reconstructed structure is a Hopf bimodule.
HopfBimodule xmodule_to_bimodule(const XModule& v, const XAlgebra& x);
/// X acting on itself by left multiplication.
XModule x_regular_module(const XAlgebra& x);
HopfBimodule x_as_bimodule(const XAlgebra& x);

}  // namespace hopfcoh
