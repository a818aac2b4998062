#pragma once

#include <optional>
#include <vector>

#include "gdlab/frame.hpp"
#include "gdlab/lattice.hpp"

namespace gdlab {

// Image operators of S_vee and the derived R_wedge on (co)stable sets.
Bits eta_S(const Frame& F, Bits U);        // union of S-sections over U, in Y
Bits eta_bar_S(const Frame& F, Bits A);    // closure of eta_S(A), costable
Bits eta_vee(const Frame& F, Bits A);      // '(eta_S(A)); equals star(F, A)
Bits zeta_bar_S(const Frame& F, Bits B);   // right residual of eta_bar_S
Bits triangle(const Frame& F, Bits C);     // zeta_bar_S(C')
Bits eta_bar_R(const Frame& F, Bits B);    // join of R_wedge sections over B
Bits eta_wedge(const Frame& F, Bits A);    // eta_bar_R(A'); throws RWedgeUnavailable

// The full complex algebra: the stable-set lattice with nu := star.
struct ComplexAlgebra {
  Frame frame;
  StableFamily fam;
  FiniteLattice lattice;  // carrier = fam.stables, nu = star table
  std::vector<int> star_tab, triangle_tab;
  std::optional<std::vector<int>> wedge_tab;  // present when nu_hat is total

  int index_of(Bits A) const { return fam.index_stable(A); }
};

// Requires the axioms the construction actually uses: F0 (the empty set is
// stable, giving the bottom) and F4 (star lands in stable sets). Verifies the
// soundness mapping: frame-level (G)/(O)/(Table 3)/(D) imply the matching
// algebra laws of the result.
ComplexAlgebra build_complex_algebra(const Frame& F);

}  // namespace gdlab
