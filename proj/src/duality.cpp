#include "gdlab/duality.hpp"

#include <algorithm>

namespace gdlab {

LatticeHom make_hom(FiniteLattice source, FiniteLattice target, std::vector<int> map) {
  int n = source.size();
  if ((int)map.size() != n) throw Error("HomInvalid", "map must be total on the source");
  for (int v : map)
    if (v < 0 || v >= target.size()) throw Error("HomInvalid", "map image out of range");
  if (map[source.bottom()] != target.bottom()) throw Error("HomInvalid", "bottom not preserved");
  if (map[source.top()] != target.top()) throw Error("HomInvalid", "top not preserved");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (map[source.meet(a, b)] != target.meet(map[a], map[b]))
        throw Error("HomInvalid", "meet not preserved at " + source.name(a) + "," + source.name(b));
      if (map[source.join(a, b)] != target.join(map[a], map[b]))
        throw Error("HomInvalid", "join not preserved at " + source.name(a) + "," + source.name(b));
      if (source.leq(a, b) && !target.leq(map[a], map[b]))
        throw Error("HomInvalid", "order not preserved");
    }
  if (source.has_nu() && target.has_nu())
    for (int a = 0; a < n; ++a)
      if (map[source.nu(a)] != target.nu(map[a]))
        throw Error("HomInvalid", "nu not preserved at " + source.name(a));
  return LatticeHom{std::move(source), std::move(target), std::move(map)};
}

FrameMorphism dual_frame_morphism(const LatticeHom& h, const CanonicalFrame& cfA,
                                  const CanonicalFrame& cfB) {
  if (!(cfA.source == h.source) || !(cfB.source == h.target))
    throw Error("HomInvalid", "canonical frames do not match the hom endpoints");
  int nA = h.source.size();
  auto find = [](const std::vector<Bits>& v, Bits s) {
    auto it = std::find(v.begin(), v.end(), s);
    return it == v.end() ? -1 : (int)(it - v.begin());
  };
  FrameMorphism m;
  m.source = cfB.frame;
  m.target = cfA.frame;
  for (Bits xf : cfB.filters) {
    Bits pre = 0;
    for (int a = 0; a < nA; ++a)
      if (has(xf, h.map[a])) pre |= bit(a);
    if (has(pre, h.source.bottom()) || !has(pre, h.source.top()))
      throw Error("ImproperImage", "inverse image of a proper filter is improper");
    int idx = find(cfA.filters, pre);
    if (idx < 0) throw Error("ImproperImage", "inverse image is not a filter");
    m.p.push_back(idx);
  }
  for (Bits yi : cfB.ideals) {
    Bits pre = 0;
    for (int a = 0; a < nA; ++a)
      if (has(yi, h.map[a])) pre |= bit(a);
    if (has(pre, h.source.top()) || !has(pre, h.source.bottom()))
      throw Error("ImproperImage", "inverse image of a proper ideal is improper");
    int idx = find(cfA.ideals, pre);
    if (idx < 0) throw Error("ImproperImage", "inverse image is not an ideal");
    m.q.push_back(idx);
  }
  AxiomReport rep = check_morphism_axioms(m);
  if (!rep.all_pass()) throw Error("MorphismAxiomsFail", "dual morphism violates M1-M5");
  return m;
}

AxiomReport check_morphism_axioms(const FrameMorphism& m) {
  const Polarity& P2 = m.source.pol;  // frame subscripted 2 in the axioms
  const Polarity& P1 = m.target.pol;
  auto I1 = [&](int x, int y) { return !P1.rel(x, y); };
  auto I2 = [&](int x, int y) { return !P2.rel(x, y); };
  AxiomReport rep;

  bool m1 = true;
  std::vector<std::string> w1;
  for (int x = 0; x < P2.nx && m1; ++x)
    for (int y = 0; y < P2.ny && m1; ++y)
      if (I2(x, y) && !I1(m.p[x], m.q[y])) { m1 = false; w1 = {P2.xname(x), P2.yname(y)}; }
  rep.set("M1", m1, w1);

  bool m2 = true;
  std::vector<std::string> w2;
  for (int x = 0; x < P1.nx && m2; ++x)
    for (int y = 0; y < P2.ny && m2; ++y) {
      if (!I1(x, m.q[y])) continue;
      bool found = false;
      for (int xp = 0; xp < P2.nx && !found; ++xp)
        if (P1.x_below(x, m.p[xp]) && I2(xp, y)) found = true;
      if (!found) { m2 = false; w2 = {P1.xname(x), P2.yname(y)}; }
    }
  rep.set("M2", m2, w2);

  bool m3 = true;
  std::vector<std::string> w3;
  for (int x = 0; x < P2.nx && m3; ++x)
    for (int y = 0; y < P1.ny && m3; ++y) {
      if (!I1(m.p[x], y)) continue;
      bool found = false;
      for (int yp = 0; yp < P2.ny && !found; ++yp)
        if (P1.y_below(y, m.q[yp]) && I2(x, yp)) found = true;
      if (!found) { m3 = false; w3 = {P2.xname(x), P1.yname(y)}; }
    }
  rep.set("M3", m3, w3);

  bool m4 = true;
  std::vector<std::string> w4;
  for (int z = 0; z < P1.nx && m4; ++z)
    for (int v = 0; v < P2.ny && m4; ++v) {
      if (!m.target.s_rel(m.q[v], z)) continue;
      bool found = false;
      for (int x = 0; x < P2.nx && !found; ++x)
        if (P1.x_below(z, m.p[x]) && m.source.s_rel(v, x)) found = true;
      if (!found) { m4 = false; w4 = {P1.xname(z), P2.yname(v)}; }
    }
  rep.set("M4", m4, w4);

  // Inverse images of closed elements must be closed. An empty inverse image
  // is allowed: closed elements with no preimage point contribute nothing to
  // the (union-generated) inverse images of stable sets.
  bool m5 = true;
  std::vector<std::string> w5;
  for (int u = 0; u < P1.nx && m5; ++u) {
    Bits pre = 0, g = P1.gamma_x(u);
    for (int x = 0; x < P2.nx; ++x)
      if (has(g, m.p[x])) pre |= bit(x);
    if (pre == 0) continue;
    bool found = false;
    for (int v = 0; v < P2.nx && !found; ++v)
      if (pre == P2.gamma_x(v)) found = true;
    if (!found) { m5 = false; w5 = {P1.xname(u)}; }
  }
  for (int u = 0; u < P1.ny && m5; ++u) {
    Bits pre = 0, g = P1.gamma_y(u);
    for (int y = 0; y < P2.ny; ++y)
      if (has(g, m.q[y])) pre |= bit(y);
    if (pre == 0) continue;
    bool found = false;
    for (int v = 0; v < P2.ny && !found; ++v)
      if (pre == P2.gamma_y(v)) found = true;
    if (!found) { m5 = false; w5 = {P1.yname(u)}; }
  }
  rep.set("M5", m5, w5);
  return rep;
}

LatticeHom inverse_image_hom(const FrameMorphism& m) {
  AxiomReport rep = check_morphism_axioms(m);
  if (!rep.all_pass()) throw Error("MorphismAxiomsFail", "M1-M5 fail");
  ComplexAlgebra ct = build_complex_algebra(m.target);
  ComplexAlgebra cs = build_complex_algebra(m.source);
  std::vector<int> map;
  for (Bits A : ct.fam.stables) {
    Bits pre = 0;
    for (int x = 0; x < m.source.pol.nx; ++x)
      if (has(A, m.p[x])) pre |= bit(x);
    int idx = cs.fam.index_stable(pre);
    if (idx < 0) throw Error("MorphismAxiomsFail", "inverse image of a stable set is not stable");
    map.push_back(idx);
  }
  LatticeHom h = make_hom(ct.lattice, cs.lattice, map);  // validates ops incl. star
  // clopen preservation (consequence of M5)
  auto clt = clopen_family_x(m.target.pol);
  auto cls = clopen_family_x(m.source.pol);
  for (Bits A : clt) {
    Bits pre = 0;
    for (int x = 0; x < m.source.pol.nx; ++x)
      if (has(A, m.p[x])) pre |= bit(x);
    if (std::find(cls.begin(), cls.end(), pre) == cls.end())
      throw Error("MorphismAxiomsFail", "inverse image of a clopen is not clopen");
  }
  return h;
}

bool unit_iso_check(const FiniteLattice& L) {
  CanonicalFrame cf = canonical_frame(L);
  try {
    representation_map(cf);  // verifies hom laws, star, bijectivity onto G(X)
  } catch (const Error& e) {
    if (e.code == "RepresentationFailure") return false;
    throw;
  }
  return true;
}

CounitReport counit_iso_check(const Frame& F) {
  CounitReport rep;
  ComplexAlgebra ca;
  try {
    ca = build_complex_algebra(F);
  } catch (const Error& e) {
    rep.detail = std::string("complex algebra unavailable: ") + e.what();
    return rep;
  }
  CanonicalFrame cf2 = canonical_frame(ca.lattice);
  const Polarity& P = F.pol;
  if ((int)cf2.filters.size() != P.nx || (int)cf2.ideals.size() != P.ny) {
    rep.detail = "point counts differ";
    return rep;
  }
  std::vector<int> lam(P.nx, -1), rho(P.ny, -1);
  for (int x = 0; x < P.nx; ++x) {
    Bits fx = 0;  // the stable sets containing x, as a filter of the algebra
    for (size_t i = 0; i < ca.fam.stables.size(); ++i)
      if (has(ca.fam.stables[i], x)) fx |= bit((int)i);
    auto it = std::find(cf2.filters.begin(), cf2.filters.end(), fx);
    if (it == cf2.filters.end()) { rep.detail = "lambda image not a point"; return rep; }
    lam[x] = (int)(it - cf2.filters.begin());
  }
  for (int y = 0; y < P.ny; ++y) {
    Bits iy = 0;  // the stable sets whose prime contains y
    for (size_t i = 0; i < ca.fam.stables.size(); ++i)
      if (has(P.prime_x(ca.fam.stables[i]), y)) iy |= bit((int)i);
    auto it = std::find(cf2.ideals.begin(), cf2.ideals.end(), iy);
    if (it == cf2.ideals.end()) { rep.detail = "rho image not a point"; return rep; }
    rho[y] = (int)(it - cf2.ideals.begin());
  }
  std::vector<bool> seen(P.nx, false);
  for (int x = 0; x < P.nx; ++x) {
    if (seen[lam[x]]) { rep.detail = "lambda not injective"; return rep; }
    seen[lam[x]] = true;
  }
  std::vector<bool> seeny(P.ny, false);
  for (int y = 0; y < P.ny; ++y) {
    if (seeny[rho[y]]) { rep.detail = "rho not injective"; return rep; }
    seeny[rho[y]] = true;
  }
  for (int x = 0; x < P.nx; ++x)
    for (int y = 0; y < P.ny; ++y) {
      if (P.rel(x, y) != cf2.frame.pol.rel(lam[x], rho[y])) {
        rep.detail = "gal not preserved/reflected";
        return rep;
      }
      if (F.s_rel(y, x) != cf2.frame.s_rel(rho[y], lam[x])) {
        rep.detail = "S_vee not preserved/reflected";
        return rep;
      }
    }
  rep.ok = true;
  return rep;
}

RoundtripReport roundtrip(const FiniteLattice& L) {
  RoundtripReport r;
  r.algebra_variety = most_specific_variety(classify_variety(L));
  CanonicalFrame cf = canonical_frame(L);
  r.frame_category = classify_frame(cf.frame);
  ComplexAlgebra ca = build_complex_algebra(cf.frame);
  r.double_dual_variety = most_specific_variety(classify_variety(ca.lattice));
  r.frame_matches = r.frame_category == "SRF*_nu" + r.algebra_variety;
  r.unit_ok = unit_iso_check(L);
  r.counit_ok = counit_iso_check(cf.frame).ok;
  return r;
}

}  // namespace gdlab
