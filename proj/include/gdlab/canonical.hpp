#pragma once

#include <vector>

#include "gdlab/frame.hpp"
#include "gdlab/lattice.hpp"

namespace gdlab {

// Dual frame of a finite quasi-complemented lattice: proper filters against
// proper ideals ("proper" = excludes bottom resp. top), x gal y iff the filter
// meets the ideal, and S_vee read off nu via the point operator nu_hat.
//
// nu_hat(x) is the ideal generated by the nu-image of x; when that ideal is
// improper (nu sends some nonzero element to top) the corresponding entry is
// -1, S_vee x is empty, and `representable` is false — axiom F2 necessarily
// fails at such points.
struct CanonicalFrame {
  FiniteLattice source;
  std::vector<Bits> filters, ideals;  // Bits over the lattice carrier
  std::vector<int> x_of_elem;         // a -> index of principal filter, -1 at bottom
  std::vector<int> y_of_elem;         // a -> index of principal ideal, -1 at top
  Frame frame;
  std::vector<int> nu_hat;  // X -> Y, -1 where improper
  bool representable = true;

  Bits rep_X(int a) const;  // X_a = {x : a in x} over filter indices
  Bits rep_Y(int a) const;  // Y^a = {y : a in y}
};

std::vector<Bits> proper_filters(const FiniteLattice& L);
std::vector<Bits> proper_ideals(const FiniteLattice& L);

CanonicalFrame canonical_frame(const FiniteLattice& L);

// a -> X_a and a -> Y^a, with every representation identity verified
// (injectivity, bounds, meet/join/closure laws, star of X_a = X_{nu a},
// bijectivity onto the stable family). Identity failures signal a bug.
struct RepresentationMap {
  std::vector<Bits> X_of, Y_of;
};
RepresentationMap representation_map(const CanonicalFrame& cf);

struct FsatReport {
  bool fsat_equals_closure = true;   // meet of enclosing opens = double prime
  bool stables_are_filters = true;   // every stable set is a filter of (X, cap)
  std::vector<std::string> witness;
};
FsatReport fsat_check(const CanonicalFrame& cf);

}  // namespace gdlab
