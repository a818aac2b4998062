#include "gdlab/complex_algebra.hpp"

namespace gdlab {

Bits eta_S(const Frame& F, Bits U) {
  Bits out = 0;
  for_each_bit(U, [&](int x) { out |= F.s_x[x]; });
  return out;
}

Bits eta_bar_S(const Frame& F, Bits A) { return F.pol.closure_y(eta_S(F, A)); }

Bits eta_vee(const Frame& F, Bits A) { return F.pol.prime_y(eta_S(F, A)); }

Bits zeta_bar_S(const Frame& F, Bits B) {
  Bits out = 0;
  for (int x = 0; x < F.pol.nx; ++x)
    if (subset(eta_bar_S(F, F.pol.gamma_x(x)), B)) out |= bit(x);
  return out;
}

Bits triangle(const Frame& F, Bits C) { return zeta_bar_S(F, F.pol.prime_x(C)); }

Bits eta_bar_R(const Frame& F, Bits B) {
  auto nh = frame_nu_hat(F);
  if (!nu_hat_total(nh)) throw Error("RWedgeUnavailable", "axiom F2 fails; no R_wedge");
  Bits un = 0;
  for (int x = 0; x < F.pol.nx; ++x) {
    // x R y iff y below nu_hat(x)
    bool hit = false;
    for_each_bit(B, [&](int y) {
      if (F.pol.y_below(y, nh[x])) hit = true;
    });
    if (hit) un |= bit(x);
  }
  return F.pol.closure_x(un);
}

Bits eta_wedge(const Frame& F, Bits A) { return eta_bar_R(F, F.pol.prime_x(A)); }

ComplexAlgebra build_complex_algebra(const Frame& F) {
  const Polarity& P = F.pol;
  if (!P.stable(0) || !P.costable(0))
    throw Error("AxiomPrereqFailed", "F0 fails: empty set not stable/costable");
  for (int x = 0; x < P.nx; ++x)
    if (!P.stable(F.perp[x]))
      throw Error("AxiomPrereqFailed", "F4 fails: perp section not stable");
  for (int z = 0; z < P.nx; ++z) {
    Bits sec = 0;
    for (int x = 0; x < P.nx; ++x)
      if (F.perp_rel(z, x)) sec |= bit(x);
    if (!P.stable(sec)) throw Error("AxiomPrereqFailed", "F4 fails: perp section not stable");
  }

  ComplexAlgebra C;
  C.frame = F;
  C.fam = stable_family(P);
  int m = (int)C.fam.stables.size();

  std::vector<std::string> names(m);
  std::vector<std::pair<int, int>> leq;
  for (int i = 0; i < m; ++i) {
    names[i] = P.set_name_x(C.fam.stables[i]);
    for (int j = 0; j < m; ++j)
      if (subset(C.fam.stables[i], C.fam.stables[j])) leq.emplace_back(i, j);
  }
  C.star_tab.resize(m);
  C.triangle_tab.resize(m);
  for (int i = 0; i < m; ++i) {
    C.star_tab[i] = C.fam.index_stable(star(F, C.fam.stables[i]));
    C.triangle_tab[i] = C.fam.index_stable(triangle(F, C.fam.stables[i]));
    if (C.star_tab[i] < 0 || C.triangle_tab[i] < 0)
      throw Error("AxiomPrereqFailed", "star/triangle image escapes the stable family");
  }
  C.lattice = FiniteLattice::from_leq_pairs(names, leq, C.star_tab);

  auto nh = frame_nu_hat(F);
  if (nu_hat_total(nh)) {
    C.wedge_tab.emplace(m);
    for (int i = 0; i < m; ++i) {
      (*C.wedge_tab)[i] = C.fam.index_stable(eta_wedge(F, C.fam.stables[i]));
      if ((*C.wedge_tab)[i] < 0)
        throw Error("AxiomPrereqFailed", "eta_wedge image escapes the stable family");
    }
  }

  // soundness mapping: frame flags imply algebra laws
  VarietyReport vr = classify_variety(C.lattice);
  if (!vr.in_m)
    throw Error("SoundnessMappingFailure", "complex algebra not a minimal quasi-complemented lattice");
  if (perp_symmetric(F) && !vr.galois)
    throw Error("SoundnessMappingFailure", "symmetric perp but star not Galois");
  if (perp_irreflexive(F) && !vr.explosion)
    throw Error("SoundnessMappingFailure", "irreflexive perp but explosion fails");
  if (nu_hat_total(nh) && perp_symmetric(F) && check_table3(F).all_pass() && !vr.involution)
    throw Error("SoundnessMappingFailure", "Table 3 frame but star not involutive");
  if (upper_bound_relation(F).axiom_d && !vr.distributive)
    throw Error("SoundnessMappingFailure", "axiom (D) frame but stable lattice not distributive");
  return C;
}

}  // namespace gdlab
