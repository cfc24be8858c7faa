#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hopfcoh/complexes.hpp"
#include "hopfcoh/xalgebra.hpp"

namespace hopfcoh {

enum class Engine { GS, GSReduced, A4, A4Unreduced, HB, HBTruncated, ExtX };

std::string engine_name(Engine e);
std::optional<Engine> parse_engine(const std::string& s);

/// A double complex together with the Hom spaces of its cells (indexed by DoubleComplex::cell).
struct HomGrid {
  DoubleComplex complex;
  std::vector<ConstrainedHomSpace> cells;
  std::vector<double> seconds;
};

/// Gerstenhaber–Schack complex. Unreduced cells are Hom_{A4}(B_q M, C^p N); reduced cells are
/// Hom_k(A^q⊗M⊗A^q, A^p⊗N⊗A^p).
HomGrid gs_grid(const HopfBimodule& m, const HopfBimodule& n, int bound, bool reduced);
DoubleComplex gs_double_complex(const HopfBimodule& m, const HopfBimodule& n, int bound, bool reduced);

/// Reduced source A^q⊗M⊗A^q (codiagonal) and target A^p⊗N⊗A^p (diagonal).
HopfBimodule gs_reduced_source(const HopfBimodule& m, int q);
HopfBimodule gs_reduced_target(const HopfBimodule& n, int p);
/// δ'_h out of cell (p,q), term by term from the printed formula.
HomOperator gs_reduced_horizontal(const HopfBimodule& m, const HopfBimodule& n, int p, int q);
/// δ'_c out of cell (p,q): (−1)^q ∂^p∘α pulled back along the cell isomorphism.
HomOperator gs_reduced_vertical(const HopfBimodule& m, const HopfBimodule& n, int p, int q);
/// δ'_c out of cell (p,q) from the printed formula.
HomOperator gs_reduced_vertical_printed(const HopfBimodule& m, const HopfBimodule& n, int p, int q);
/// β ↦ the Hopf bimodule map B_q M → C^p N, a⊗v⊗b ↦ a·[v₋₁⊗β(v₀)⊗v₁]·b.
SparseMatrix gs_extend(const HopfBimodule& m, const HopfBimodule& n, int p, int q, const SparseMatrix& beta);
/// α ↦ (ε⊗1⊗ε)∘α∘(η⊗1⊗η).
SparseMatrix gs_restrict(const HopfBimodule& m, const HopfBimodule& n, int p, int q, const SparseMatrix& alpha);

/// Bialgebra complex with cells Hom_k(A^q, A^p); truncated zeroes row p = 0 and column q = 0.
HomGrid hb_grid(const AlgebraPtr& h, int bound, bool truncated);
DoubleComplex hb_double_complex(const AlgebraPtr& h, int bound, bool truncated);
HomOperator hb_horizontal(const HopfAlgebra& h, int p, int q);
HomOperator hb_vertical(const HopfAlgebra& h, int p, int q);
/// Identification of an H_b cochain β: A^q → A^p with the A4 cochain A⊗A^q → A^p⊗A, and back.
SparseMatrix hb_to_a4(const AlgebraPtr& h, int p, int q, const SparseMatrix& beta);
SparseMatrix a4_to_hb(const AlgebraPtr& h, int p, int q, const SparseMatrix& alpha);

/// Hopf bimodule complex. Reduced cells are the left-module, right-comodule maps M⊗A^q → A^p⊗N;
/// unreduced cells are Hom_{A4}(M⊗A^{q+1}, A^{p+1}⊗N).
HomGrid a4_grid(const HopfBimodule& m, const HopfBimodule& n, int bound, bool unreduced);
DoubleComplex a4_double_complex(const HopfBimodule& m, const HopfBimodule& n, int bound, bool unreduced);
HopfBimodule a4_source(const HopfBimodule& m, int q);
HopfBimodule a4_target(const HopfBimodule& n, int p);
/// Ambient operators of the reduced complex out of cell (p,q).
HomOperator a4_horizontal(const HopfBimodule& m, const HopfBimodule& n, int p, int q);
HomOperator a4_vertical(const HopfBimodule& m, const HopfBimodule& n, int p, int q);

/// Hom_k(X^⊗k ⊗ M, N) with the bar differential, degrees 0..top.
CochainComplex ext_x_complex(const HopfBimodule& m, const HopfBimodule& n, const XAlgebra& x, int top);
std::vector<Index> ext_x_dims(const HopfBimodule& m, const HopfBimodule& n, const XAlgebra& x, int n_max);

struct CohomologyReport {
  Engine engine;
  std::vector<Index> dims;
  /// (p, q, dim) per cell; for Ext over X, (k, 0, dim C^k).
  std::vector<std::array<Index, 3>> cell_dims;
  std::vector<double> cell_seconds;
  std::vector<std::string> violations;
};

/// Cohomology dimensions at degrees 0..n_max; also checks D² = 0.
CohomologyReport compute_cohomology(Engine e, const HopfBimodule& m, const HopfBimodule& n, int n_max);

/// GS (reduced) or A4 cohomology of X as a bimodule into n; positive degrees must vanish.
struct VanishingReport {
  std::vector<Index> dims;
  bool vanishes = true;
};
VanishingReport projective_vanishing_check(const XAlgebra& x, const HopfBimodule& n, int n_max, Engine e = Engine::GSReduced);

}  // namespace hopfcoh
