#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hopfcoh/hopf.hpp"
#include "hopfcoh/linalg.hpp"

namespace hopfcoh {

using AlgebraPtr = std::shared_ptr<const HopfAlgebra>;

/// Hopf bimodule given by its four structure maps on flattened bases.
///
///   act_left   m × (n·m)   a⊗v ↦ a·v
///   act_right  m × (m·n)   v⊗a ↦ v·a
///   coact_left (n·m) × m   v ↦ v₍₋₁₎⊗v₍₀₎
///   coact_right (m·n) × m  v ↦ v₍₀₎⊗v₍₁₎
struct HopfBimodule {
  AlgebraPtr algebra;
  Index dim = 0;
  SparseMatrix act_left, act_right, coact_left, coact_right;
  std::string name;

  PrimeField field() const { return algebra->field(); }
  /// Throws when a structure map has the wrong shape.
  void check_shapes() const;
};

/// Names of failed axioms; empty for a Hopf bimodule.
std::vector<std::string> verify_hopf_bimodule(const HopfBimodule& m);

HopfBimodule regular_bimodule(AlgebraPtr h);

/// V⊗W with left action on V, right action on W and codiagonal coactions.
HopfBimodule codiagonal_tensor(const HopfBimodule& v, const HopfBimodule& w);
/// V⊗W with diagonal actions, left coaction from V and right coaction from W.
HopfBimodule diagonal_tensor(const HopfBimodule& v, const HopfBimodule& w);
HopfBimodule codiagonal_tensor(const std::vector<HopfBimodule>& factors);
HopfBimodule diagonal_tensor(const std::vector<HopfBimodule>& factors);

/// M⊗A^⊗k, standard actions and codiagonal coactions.
HopfBimodule right_tensor_power(const HopfBimodule& m, int k);
/// A^⊗k⊗N, diagonal actions and standard coactions.
HopfBimodule left_tensor_power(const HopfBimodule& n, int k);
/// V⊕W, V first.
HopfBimodule direct_sum(const HopfBimodule& v, const HopfBimodule& w);

/// Right coinvariants {v : δ_R(v) = v⊗1}.
SubspaceBasis coinvariants(const HopfBimodule& m);
/// a⊗v ↦ a·v from A⊗M^R to M; throws "freeness failure" unless invertible.
SparseMatrix freeness_iso(const HopfBimodule& m);

bool is_left_module_morphism(const SparseMatrix& f, const HopfBimodule& v, const HopfBimodule& w);
bool is_right_module_morphism(const SparseMatrix& f, const HopfBimodule& v, const HopfBimodule& w);
bool is_left_comodule_morphism(const SparseMatrix& f, const HopfBimodule& v, const HopfBimodule& w);
bool is_right_comodule_morphism(const SparseMatrix& f, const HopfBimodule& v, const HopfBimodule& w);
bool is_bimodule_morphism(const SparseMatrix& f, const HopfBimodule& v, const HopfBimodule& w);
bool is_bicomodule_morphism(const SparseMatrix& f, const HopfBimodule& v, const HopfBimodule& w);
bool is_hopf_morphism(const SparseMatrix& f, const HopfBimodule& v, const HopfBimodule& w);

/// The bar resolution B_q(M) = A^⊗(q+1)⊗M⊗A^⊗(q+1), factor order a₀…a_q, m, b_q…b₀.
struct BarComplex {
  HopfBimodule base;
  /// terms[q] = B_q, 0 ≤ q ≤ q_max.
  std::vector<HopfBimodule> terms;
  /// d[q] = ∂_q : B_q → B_{q−1}, with B_{−1} = M.
  std::vector<SparseMatrix> d;
  /// h[q+1] = h_q : B_q → B_{q+1}, for −1 ≤ q < q_max.
  std::vector<SparseMatrix> h;
};

/// The cobar resolution C^p(N) with the same factor layout.
struct CobarComplex {
  HopfBimodule base;
  std::vector<HopfBimodule> terms;
  /// N → C⁰, n ↦ n₍₋₁₎⊗n₍₀₎⊗n₍₁₎.
  SparseMatrix coaugmentation;
  /// d[p] = ∂^p : C^p → C^{p+1}, 0 ≤ p < p_max.
  std::vector<SparseMatrix> d;
  /// h[p] = h^p : C^p → C^{p−1}, with C^{−1} = N.
  std::vector<SparseMatrix> h;
};

HopfBimodule bar_term(const HopfBimodule& m, int q);
HopfBimodule cobar_term(const HopfBimodule& n, int p);
/// ∂_q : B_q → B_{q−1} (q ≥ 0).
SparseMatrix bar_differential(const HopfBimodule& m, int q);
/// ∂^p : C^p → C^{p+1} (p ≥ 0).
SparseMatrix cobar_differential(const HopfBimodule& n, int p);
/// n ↦ n₍₋₁₎⊗n₍₀₎⊗n₍₁₎.
SparseMatrix cobar_coaugmentation(const HopfBimodule& n);
/// h_q : B_q → B_{q+1}, x ↦ 1⊗x⊗1 (q ≥ −1).
SparseMatrix bar_homotopy(const HopfBimodule& m, int q);
/// h^p : C^p → C^{p−1}, applies ε to a₀ and b₀ (p ≥ 0).
SparseMatrix cobar_homotopy(const HopfBimodule& n, int p);

BarComplex bar_complex(const HopfBimodule& m, int q_max);
CobarComplex cobar_complex(const HopfBimodule& n, int p_max);

/// Dimension n^(2k+2)·m of a bar or cobar term, checked against the memory guard.
Index resolution_term_dim(const HopfBimodule& m, int k);

}  // namespace hopfcoh
