#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gdlab/bits.hpp"
#include "gdlab/error.hpp"

namespace gdlab {

// Sorted frame (X, gal, Y): two carriers and a relation generating a Galois
// connection between their powersets. The incidence complement I is implicit
// (!rel). Carrier points may carry display names for reports.
struct Polarity {
  int nx = 0, ny = 0;
  std::vector<Bits> xrow;  // xrow[x] = {y : x gal y} over Y
  std::vector<Bits> ycol;  // ycol[y] = {x : x gal y} over X
  std::vector<std::string> xnames, ynames;

  static Polarity make(int nx, int ny, const std::vector<std::pair<int, int>>& gal);

  bool rel(int x, int y) const { return has(xrow[x], y); }
  Bits xmask() const { return full_mask(nx); }
  Bits ymask() const { return full_mask(ny); }

  // U' and 'V of the Galois connection
  Bits prime_x(Bits U) const {
    Bits v = ymask();
    for_each_bit(U, [&](int x) { v &= xrow[x]; });
    return v;
  }
  Bits prime_y(Bits V) const {
    Bits u = xmask();
    for_each_bit(V, [&](int y) { u &= ycol[y]; });
    return u;
  }
  Bits closure_x(Bits U) const { return prime_y(prime_x(U)); }
  Bits closure_y(Bits V) const { return prime_x(prime_y(V)); }
  bool stable(Bits A) const { return closure_x(A) == A; }
  bool costable(Bits B) const { return closure_y(B) == B; }

  // specialization preorders: x below z iff {x}' is contained in {z}'
  bool x_below(int x, int z) const { return subset(xrow[x], xrow[z]); }
  bool y_below(int y, int v) const { return subset(ycol[y], ycol[v]); }
  Bits gamma_x(int x) const {  // specialization upset of x; equals {x}''
    Bits g = 0;
    for (int z = 0; z < nx; ++z)
      if (x_below(x, z)) g |= bit(z);
    return g;
  }
  Bits gamma_y(int y) const {
    Bits g = 0;
    for (int v = 0; v < ny; ++v)
      if (y_below(y, v)) g |= bit(v);
    return g;
  }
  bool separated() const;

  std::string xname(int x) const { return x < (int)xnames.size() ? xnames[x] : "x" + std::to_string(x); }
  std::string yname(int y) const { return y < (int)ynames.size() ? ynames[y] : "y" + std::to_string(y); }
  std::string set_name_x(Bits U) const;
  std::string set_name_y(Bits V) const;
};

// The complete lattices of stable and co-stable sets, enumerated as the
// intersection closure of the open elements (plus the full carriers).
struct StableFamily {
  std::vector<Bits> stables;    // sorted by (popcount, value)
  std::vector<Bits> costables;  // same order convention
  int index_stable(Bits A) const;
  int index_costable(Bits B) const;
};

StableFamily stable_family(const Polarity& P);

}  // namespace gdlab
