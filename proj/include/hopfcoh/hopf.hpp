#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfcoh/sparse.hpp"

namespace hopfcoh {

/// Finite-dimensional Hopf algebra over F_p given by structure constants.
///
/// Structure maps are stored as matrices on the flattened tensor bases:
/// mul is n × n² (column i·n+j is e_i e_j), comul is n² × n, antipode n × n.
/// Immutable once built.
class HopfAlgebra {
 public:
  HopfAlgebra() = default;
  /// Checks dimensions; computes S⁻¹ by inversion when not supplied.
  HopfAlgebra(PrimeField f, SparseMatrix mul, std::vector<Elem> unit, SparseMatrix comul, std::vector<Elem> counit,
              SparseMatrix antipode, std::optional<SparseMatrix> antipode_inv = std::nullopt, std::string name = {});

  PrimeField field() const { return field_; }
  Index dim() const { return dim_; }
  const std::string& name() const { return name_; }

  const SparseMatrix& mul() const { return mul_; }
  const std::vector<Elem>& unit() const { return unit_; }
  const SparseMatrix& comul() const { return comul_; }
  const std::vector<Elem>& counit() const { return counit_; }
  const SparseMatrix& antipode() const { return antipode_; }
  const SparseMatrix& antipode_inv() const { return antipode_inv_; }

  /// η as an n × 1 matrix and ε as a 1 × n matrix.
  const SparseMatrix& unit_map() const { return unit_map_; }
  const SparseMatrix& counit_map() const { return counit_map_; }
  const SparseMatrix& identity() const { return identity_; }

  /// e_i e_j as a sparse vector.
  const SparseVec& product(Index i, Index j) const { return mul_.column(i * dim_ + j); }
  /// Δ(e_i) on the flattened basis of A⊗A.
  const SparseVec& coproduct(Index i) const { return comul_.column(i); }

 private:
  PrimeField field_;
  Index dim_ = 0;
  std::string name_;
  SparseMatrix mul_, comul_, antipode_, antipode_inv_;
  std::vector<Elem> unit_, counit_;
  SparseMatrix unit_map_, counit_map_, identity_;
};

/// Names of failed axioms; empty when h is a Hopf algebra.
std::vector<std::string> verify_hopf(const HopfAlgebra& h);

/// Group algebra of the group with Cayley table table[g][h] = index of gh.
HopfAlgebra group_algebra(const std::vector<std::vector<Index>>& table, PrimeField f, std::string name = {});
HopfAlgebra cyclic_group_algebra(Index order, PrimeField f);
/// Symmetric group on three letters.
HopfAlgebra symmetric_group_s3(PrimeField f);

/// Basis {1, g, x, gx}; g² = 1, x² = 0, xg = −gx. Requires p ≠ 2.
HopfAlgebra sweedler_h4(PrimeField f);
/// Basis g^a x^b at index a + n·b; q must be a primitive n-th root of unity.
HopfAlgebra taft(Index n, PrimeField f, Elem q);

/// Dual Hopf algebra on the dual basis.
HopfAlgebra dual(const HopfAlgebra& h);
/// Reversed multiplication, everything else unchanged. The result need not satisfy the antipode axiom.
HopfAlgebra opposite(const HopfAlgebra& h);

/// Product of two elements of A.
SparseVec multiply(const HopfAlgebra& h, const SparseVec& a, const SparseVec& b);
/// Product in the tensor-power algebra A^⊗k (factorwise).
SparseVec multiply_tensor(const HopfAlgebra& h, int k, const SparseVec& a, const SparseVec& b);

/// Δ^(u): A → A^⊗(u+1); u = −1 gives ε, u = 0 the identity.
SparseMatrix iterated_comul(const HopfAlgebra& h, int u);
/// μ^(k): A^⊗k → A; k = 0 gives η, k = 1 the identity.
SparseMatrix iterated_mul(const HopfAlgebra& h, int k);
/// Identity on A^⊗k (1 × 1 for k = 0).
SparseMatrix tensor_identity(const HopfAlgebra& h, int k);
/// The map 1^⊗i ⊗ f ⊗ 1^⊗j.
SparseMatrix pad(const HopfAlgebra& h, int i, const SparseMatrix& f, int j);

}  // namespace hopfcoh
