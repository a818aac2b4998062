#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gdlab/polarity.hpp"
#include "gdlab/relation.hpp"

namespace gdlab {

// Polarity together with the relation S_vee (a subset of Y x X, written
// y S x) representing the quasi-complementation, plus the cached
// incompatibility relation perp = S' (a subset of X x X).
struct Frame {
  Polarity pol;
  std::vector<Bits> s_x;   // s_x[x] = {y : y S x}
  std::vector<Bits> perp;  // perp[x] = {z : z perp x} = '(s_x[x])
  // an R_wedge supplied by an input file, cross-checked by derive_r_wedge
  std::optional<std::vector<std::pair<int, int>>> explicit_r_wedge;

  static Frame make(Polarity pol, const std::vector<std::pair<int, int>>& s_pairs);
  static Frame make_from_sections(Polarity pol, std::vector<Bits> s_x);

  bool s_rel(int y, int x) const { return has(s_x[x], y); }
  Bits s_section_y(int y) const {  // {x : y S x}
    Bits out = 0;
    for (int x = 0; x < pol.nx; ++x)
      if (s_rel(y, x)) out |= bit(x);
    return out;
  }
  SortedRelation s_relation() const;  // sort (Y; X), tuples (y, x)
  bool perp_rel(int z, int x) const { return has(perp[x], z); }
};

// A* = {x : x perp u for all u in A}; stable whenever F4 holds.
Bits star(const Frame& F, Bits A);
bool perp_symmetric(const Frame& F);
bool perp_irreflexive(const Frame& F);

// nu_hat read off axiom F2: S_vee x = Gamma(nu_hat x); entry -1 where no
// generator exists (F2 fails at that point).
std::vector<int> frame_nu_hat(const Frame& F);
bool nu_hat_total(const std::vector<int>& nh);

// Clopen elements: closed elements Gamma x that are also open elements '{y},
// together with the full carrier and (when stable) the empty set — the finite
// stand-ins for the compact-open corners of the spectral reading.
std::vector<Bits> clopen_family_x(const Polarity& P);
std::vector<Bits> clopen_family_y(const Polarity& P);

struct AxiomResult {
  bool pass = true;
  std::vector<std::string> witness;  // counterexample tuple, named points
};
struct AxiomReport {
  std::vector<std::pair<std::string, AxiomResult>> axioms;
  bool all_pass() const;
  void set(const std::string& name, bool pass, std::vector<std::string> witness = {});
  const AxiomResult* find(const std::string& name) const;
};

AxiomReport check_table2(const Frame& F);          // F0..F4
AxiomReport check_table4_objects(const Frame& F);  // F2s, F5, F6, F7
AxiomReport check_table3(const Frame& F);          // I1..I5; needs nu_hat total

// R_wedge derived from nu_hat: x R y iff y is below nu_hat(x); cross-checks
// an explicitly supplied R_wedge when present.
SortedRelation derive_r_wedge(const Frame& F);  // throws NuHatUndefined

struct DistributivityReport {
  bool axiom_d = false;  // all sections of the dual of R_leq are Galois sets
  std::vector<std::string> d_witness;
  bool stable_lattice_distributive = false;
};
DistributivityReport upper_bound_relation(const Frame& F);

// Most specific of SRF*_nuBA/nuDMA/nuO/nuINV/nuG/nuM, or "none" when the
// object axioms fail.
std::string classify_frame(const Frame& F);

struct ImplicationCheckEntry {
  std::string name;
  bool holds;
};
struct CorrespondenceReport {
  bool symmetric = false, irreflexive = false;
  bool dne_sub = false;           // A contained in A** for all stable A
  bool star_eq_triangle = false;  // as tables on stables
  bool cap_empty = false;         // A and A* disjoint for all stable A
  bool star_involutive = false;   // A** = A for all stable A
  std::vector<ImplicationCheckEntry> directions;
  bool all_directions_hold() const;
};
CorrespondenceReport check_correspondence(const Frame& F);

}  // namespace gdlab
