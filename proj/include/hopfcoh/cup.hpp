#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "hopfcoh/theories.hpp"

namespace hopfcoh {

/// A cochain of the reduced Hopf bimodule complex: components u_t : M⊗A^{n−t} → A^t⊗N for t = 0..n.
struct A4Cochain {
  HopfBimodule src, tgt;
  int degree = 0;
  std::vector<SparseMatrix> components;

  friend bool operator==(const A4Cochain& a, const A4Cochain& b);
};

A4Cochain zero_cochain(const HopfBimodule& m, const HopfBimodule& n, int degree);
/// Uniformly random in each constrained component space.
A4Cochain random_cochain(const HopfBimodule& m, const HopfBimodule& n, int degree, std::mt19937_64& rng);
/// A Hopf bimodule map M → N as a 0-cochain.
A4Cochain degree_zero_cochain(const HopfBimodule& m, const HopfBimodule& n, const SparseMatrix& g);
/// Names of failing component constraints.
std::vector<std::string> check_cochain(const A4Cochain& c);

A4Cochain operator+(const A4Cochain& a, const A4Cochain& b);
A4Cochain scale(Elem c, const A4Cochain& a);
/// The total differential D = d_h + d_c.
A4Cochain coboundary(const A4Cochain& c);
bool is_cocycle(const A4Cochain& c);

/// f ⌣ g for f : M → L of degree p and g : L → N of degree q.
A4Cochain cup(const A4Cochain& f, const A4Cochain& g);
/// f × g = (−1)^{pq} f ⌣ g.
A4Cochain cross(const A4Cochain& f, const A4Cochain& g);
/// D(f⌣g) = Df⌣g + (−1)^p f⌣Dg.
bool cup_is_derivation_check(const A4Cochain& f, const A4Cochain& g);
/// (f⌣g)⌣h0 = f⌣(g⌣h0) for a degree-0 h0.
bool partial_assoc_check(const A4Cochain& f, const A4Cochain& g, const A4Cochain& h0);

/// Cochains of a fixed degree in the cell coordinates of the reduced complex.
class A4CochainSpace {
 public:
  A4CochainSpace(const HopfBimodule& m, const HopfBimodule& n, int degree);

  int degree() const { return degree_; }
  Index dim() const { return total_.dim(degree_); }
  std::vector<Elem> coordinates(const A4Cochain& c) const;
  A4Cochain cochain(std::span<const Elem> coords) const;
  /// Cocycles spanning the kernel of D.
  std::vector<A4Cochain> cocycle_basis() const;
  /// Cocycles whose classes form a basis of H^degree.
  std::vector<A4Cochain> cohomology_basis() const;
  /// Some u of degree − 1 with Du = c, or nullopt; degree ≥ 1.
  std::optional<A4Cochain> bounding(const A4Cochain& c) const;
  /// In degree 0 only the zero cochain.
  bool is_coboundary(const A4Cochain& c) const;

 private:
  HopfBimodule m_, n_;
  int degree_;
  HomGrid grid_;
  CochainComplex total_;
};

/// H_b cochains: components β_t : A^{n−t} → A^t.
struct HbCochain {
  AlgebraPtr algebra;
  int degree = 0;
  std::vector<SparseMatrix> components;

  friend bool operator==(const HbCochain& a, const HbCochain& b);
};

HbCochain hb_cup(const HbCochain& f, const HbCochain& g);
HbCochain hb_coboundary(const HbCochain& c);
A4Cochain hb_to_a4(const HbCochain& c);
HbCochain a4_to_hb(const A4Cochain& c);

/// 0 → L → middle → R → 0 with inclusion i and projection π.
struct Extension {
  HopfBimodule left, right, middle;
  SparseMatrix inclusion, projection;
};

/// Middle L⊕R (L first) with the right action perturbed by f₀ and the left coaction by f₁; not verified.
Extension build_extension(const A4Cochain& f);
/// Middle axioms, exactness and morphism checks.
std::vector<std::string> verify_extension(const Extension& e);
/// Throws VerificationError naming the violated axioms unless f is a cocycle.
Extension extension_from_1cocycle(const A4Cochain& f);
/// Pushout along a Hopf bimodule map g : L → N, as the quotient of N ⊕ middle by {(g(l), −i(l))},
/// written in the basis N ⊕ R.
Extension pushout(const SparseMatrix& g, const HopfBimodule& n, const Extension& e);
/// A Hopf bimodule isomorphism of middles compatible with the ends, if one exists.
std::optional<SparseMatrix> extension_equivalence(const Extension& a, const Extension& b);
bool extensions_equivalent(const Extension& a, const Extension& b);

/// Compares the pushout of the extension of f along g with the extension of f ⌣ g (or f × g).
bool yoneda_degree10_check(const A4Cochain& f, const A4Cochain& g, bool use_cross = false);

}  // namespace hopfcoh
