#include "gdlab/frame.hpp"

#include <algorithm>
#include <set>

#include "gdlab/complex_algebra.hpp"

namespace gdlab {

Frame Frame::make(Polarity pol, const std::vector<std::pair<int, int>>& s_pairs) {
  std::vector<Bits> s_x(pol.nx, 0);
  for (auto [y, x] : s_pairs) {
    if (y < 0 || y >= pol.ny || x < 0 || x >= pol.nx)
      throw Error("InputError", "S pair out of range");
    s_x[x] |= bit(y);
  }
  return make_from_sections(std::move(pol), std::move(s_x));
}

Frame Frame::make_from_sections(Polarity pol, std::vector<Bits> s_x) {
  if ((int)s_x.size() != pol.nx) throw Error("InputError", "S sections must cover X");
  Frame F;
  F.pol = std::move(pol);
  F.s_x = std::move(s_x);
  F.perp.resize(F.pol.nx);
  for (int x = 0; x < F.pol.nx; ++x) F.perp[x] = F.pol.prime_y(F.s_x[x]);
  return F;
}

SortedRelation Frame::s_relation() const {
  SortedRelation R;
  R.sig = {Sort::Y, Sort::X};
  for (int x = 0; x < pol.nx; ++x)
    for_each_bit(s_x[x], [&](int y) { R.tuples.insert({y, x}); });
  return R;
}

Bits star(const Frame& F, Bits A) {
  Bits out = F.pol.xmask();
  for_each_bit(A, [&](int u) { out &= F.perp[u]; });
  return out;
}

bool perp_symmetric(const Frame& F) {
  for (int x = 0; x < F.pol.nx; ++x)
    for (int z = 0; z < F.pol.nx; ++z)
      if (F.perp_rel(z, x) != F.perp_rel(x, z)) return false;
  return true;
}

bool perp_irreflexive(const Frame& F) {
  for (int x = 0; x < F.pol.nx; ++x)
    if (F.perp_rel(x, x)) return false;
  return true;
}

std::vector<int> frame_nu_hat(const Frame& F) {
  std::vector<int> nh(F.pol.nx, -1);
  for (int x = 0; x < F.pol.nx; ++x)
    for (int y = 0; y < F.pol.ny; ++y)
      if (F.s_x[x] == F.pol.gamma_y(y)) {
        nh[x] = y;
        break;
      }
  return nh;
}

bool nu_hat_total(const std::vector<int>& nh) {
  return std::all_of(nh.begin(), nh.end(), [](int v) { return v >= 0; });
}

namespace {

std::vector<Bits> clopen_family(int n, Bits carrier,
                                const std::vector<Bits>& gammas,
                                const std::vector<Bits>& opens, bool empty_in) {
  std::set<Bits> fam;
  for (int u = 0; u < n; ++u)
    for (Bits o : opens)
      if (gammas[u] == o) fam.insert(o);
  fam.insert(carrier);
  if (empty_in) fam.insert(0);
  return std::vector<Bits>(fam.begin(), fam.end());
}

}  // namespace

std::vector<Bits> clopen_family_x(const Polarity& P) {
  std::vector<Bits> gammas(P.nx), opens(P.ny);
  for (int x = 0; x < P.nx; ++x) gammas[x] = P.gamma_x(x);
  for (int y = 0; y < P.ny; ++y) opens[y] = P.ycol[y];
  return clopen_family(P.nx, P.xmask(), gammas, opens, P.stable(0));
}

std::vector<Bits> clopen_family_y(const Polarity& P) {
  std::vector<Bits> gammas(P.ny), opens(P.nx);
  for (int y = 0; y < P.ny; ++y) gammas[y] = P.gamma_y(y);
  for (int x = 0; x < P.nx; ++x) opens[x] = P.xrow[x];
  return clopen_family(P.ny, P.ymask(), gammas, opens, P.costable(0));
}

bool AxiomReport::all_pass() const {
  return std::all_of(axioms.begin(), axioms.end(),
                     [](const auto& a) { return a.second.pass; });
}

void AxiomReport::set(const std::string& name, bool pass, std::vector<std::string> witness) {
  axioms.push_back({name, AxiomResult{pass, pass ? std::vector<std::string>{} : std::move(witness)}});
}

const AxiomResult* AxiomReport::find(const std::string& name) const {
  for (const auto& a : axioms)
    if (a.first == name) return &a.second;
  return nullptr;
}

AxiomReport check_table2(const Frame& F) {
  const Polarity& P = F.pol;
  AxiomReport rep;

  bool f0 = true;
  std::vector<std::string> w0;
  for (int x = 0; x < P.nx && f0; ++x)
    if (P.xrow[x] == P.ymask()) { f0 = false; w0 = {P.xname(x)}; }
  for (int y = 0; y < P.ny && f0; ++y)
    if (P.ycol[y] == P.xmask()) { f0 = false; w0 = {P.yname(y)}; }
  rep.set("F0", f0, w0);

  bool f1 = P.separated();
  std::vector<std::string> w1;
  if (!f1) {
    for (int x = 0; x < P.nx && w1.empty(); ++x)
      for (int z = x + 1; z < P.nx; ++z)
        if (P.xrow[x] == P.xrow[z]) { w1 = {P.xname(x), P.xname(z)}; break; }
    for (int y = 0; y < P.ny && w1.empty(); ++y)
      for (int v = y + 1; v < P.ny; ++v)
        if (P.ycol[y] == P.ycol[v]) { w1 = {P.yname(y), P.yname(v)}; break; }
  }
  rep.set("F1", f1, w1);

  auto nh = frame_nu_hat(F);
  bool f2 = true;
  std::vector<std::string> w2;
  for (int x = 0; x < P.nx; ++x)
    if (nh[x] < 0) { f2 = false; w2 = {P.xname(x)}; break; }
  rep.set("F2", f2, w2);

  bool f3 = true;
  std::vector<std::string> w3;
  for (int y = 0; y < P.ny && f3; ++y) {
    Bits sec = F.s_section_y(y);
    for_each_bit(sec, [&](int x) {
      for (int z = 0; z < P.nx; ++z)
        if (P.x_below(z, x) && !has(sec, z)) {
          f3 = false;
          if (w3.empty()) w3 = {P.yname(y), P.xname(x), P.xname(z)};
        }
    });
  }
  rep.set("F3", f3, w3);

  bool f4 = true;
  std::vector<std::string> w4;
  for (int x = 0; x < P.nx && f4; ++x)
    if (!P.stable(F.perp[x])) { f4 = false; w4 = {"section perp _ " + P.xname(x)}; }
  for (int z = 0; z < P.nx && f4; ++z) {
    Bits sec = 0;
    for (int x = 0; x < P.nx; ++x)
      if (F.perp_rel(z, x)) sec |= bit(x);
    if (!P.stable(sec)) { f4 = false; w4 = {"section " + P.xname(z) + " perp _"}; }
  }
  rep.set("F4", f4, w4);
  return rep;
}

AxiomReport check_table4_objects(const Frame& F) {
  const Polarity& P = F.pol;
  AxiomReport rep;
  auto famx = clopen_family_x(P);
  auto famy = clopen_family_y(P);
  auto inx = [&](Bits A) { return std::find(famx.begin(), famx.end(), A) != famx.end(); };
  auto iny = [&](Bits B) { return std::find(famy.begin(), famy.end(), B) != famy.end(); };

  bool f2s = true;
  std::vector<std::string> w2;
  for (int z = 0; z < P.nx; ++z)
    if (inx(P.gamma_x(z)) && !iny(F.s_x[z])) {
      f2s = false;
      w2 = {P.xname(z)};
      break;
    }
  rep.set("F2s", f2s, w2);

  bool f5 = true;
  std::vector<std::string> w5;
  for (size_t i = 0; i < famx.size() && f5; ++i)
    for (size_t j = i + 1; j < famx.size() && f5; ++j)
      if (!inx(famx[i] & famx[j])) { f5 = false; w5 = {P.set_name_x(famx[i]), P.set_name_x(famx[j])}; }
  for (size_t i = 0; i < famy.size() && f5; ++i)
    for (size_t j = i + 1; j < famy.size() && f5; ++j)
      if (!iny(famy[i] & famy[j])) { f5 = false; w5 = {P.set_name_y(famy[i]), P.set_name_y(famy[j])}; }
  rep.set("F5", f5, w5);

  bool f6 = true;
  std::vector<std::string> w6;
  for (int x = 0; x < P.nx && f6; ++x) {
    Bits g = P.gamma_x(x), meet = P.xmask();
    for (Bits c : famx)
      if (subset(g, c)) meet &= c;
    if (meet != g) { f6 = false; w6 = {P.xname(x)}; }
  }
  for (int y = 0; y < P.ny && f6; ++y) {
    Bits g = P.gamma_y(y), meet = P.ymask();
    for (Bits c : famy)
      if (subset(g, c)) meet &= c;
    if (meet != g) { f6 = false; w6 = {P.yname(y)}; }
  }
  rep.set("F6", f6, w6);

  // finite spectral surrogate: the clopen family is an intersection-closed
  // basis containing the carrier whose topology is T0
  bool f7 = true;
  std::vector<std::string> w7;
  Bits covered = 0;
  for (Bits c : famx) covered |= c;
  if (covered != P.xmask()) { f7 = false; w7 = {"X not covered"}; }
  for (int x = 0; x < P.nx && f7; ++x)
    for (int z = x + 1; z < P.nx && f7; ++z) {
      bool distinguished = false;
      for (Bits c : famx)
        if (has(c, x) != has(c, z)) { distinguished = true; break; }
      if (!distinguished) { f7 = false; w7 = {"T0 fails", P.xname(x), P.xname(z)}; }
    }
  covered = 0;
  for (Bits c : famy) covered |= c;
  if (f7 && covered != P.ymask()) { f7 = false; w7 = {"Y not covered"}; }
  for (int y = 0; y < P.ny && f7; ++y)
    for (int v = y + 1; v < P.ny && f7; ++v) {
      bool distinguished = false;
      for (Bits c : famy)
        if (has(c, y) != has(c, v)) { distinguished = true; break; }
      if (!distinguished) { f7 = false; w7 = {"T0 fails", P.yname(y), P.yname(v)}; }
    }
  rep.set("F7", f7, w7);
  return rep;
}

SortedRelation derive_r_wedge(const Frame& F) {
  auto nh = frame_nu_hat(F);
  if (!nu_hat_total(nh)) throw Error("NuHatUndefined", "axiom F2 fails; R_wedge underivable");
  SortedRelation R;
  R.sig = {Sort::X, Sort::Y};
  for (int x = 0; x < F.pol.nx; ++x)
    for (int y = 0; y < F.pol.ny; ++y)
      if (F.pol.y_below(y, nh[x])) R.tuples.insert({x, y});
  if (F.explicit_r_wedge) {
    SortedRelation given;
    given.sig = R.sig;
    for (auto [x, y] : *F.explicit_r_wedge) given.tuples.insert({x, y});
    if (given.tuples != R.tuples)
      throw Error("RWedgeMismatch", "supplied R_wedge disagrees with the derived relation");
  }
  return R;
}

AxiomReport check_table3(const Frame& F) {
  const Polarity& P = F.pol;
  auto nh = frame_nu_hat(F);
  if (!nu_hat_total(nh)) throw Error("NuHatUndefined", "axiom F2 fails; Table 3 needs nu_hat");
  SortedRelation R = derive_r_wedge(F);
  AxiomReport rep;

  std::vector<int> nu_tilde(P.ny, -1);
  bool i1 = true;
  std::vector<std::string> w1;
  for (int y = 0; y < P.ny; ++y) {
    Bits sec = section(P, R, {-1, y});
    for (int u = 0; u < P.nx; ++u)
      if (sec == P.gamma_x(u)) { nu_tilde[y] = u; break; }
    if (nu_tilde[y] < 0 && i1) { i1 = false; w1 = {P.yname(y)}; }
  }
  rep.set("I1", i1, w1);

  bool i2 = true;
  std::vector<std::string> w2;
  for (int x = 0; x < P.nx && i2; ++x) {
    Bits sec = section(P, R, {x, -1});
    for_each_bit(sec, [&](int y) {
      for (int v = 0; v < P.ny; ++v)
        if (P.y_below(v, y) && !has(sec, v)) {
          i2 = false;
          if (w2.empty()) w2 = {P.xname(x), P.yname(y), P.yname(v)};
        }
    });
  }
  rep.set("I2", i2, w2);

  SortedRelation D = galois_dual(P, R);
  bool i3 = true;
  std::vector<std::string> w3;
  for (int y = 0; y < P.ny && i3; ++y)
    if (!P.costable(section(P, D, {-1, y}))) { i3 = false; w3 = {"section _ " + P.yname(y)}; }
  for (int v = 0; v < P.ny && i3; ++v) {
    Bits sec = 0;
    for (int y = 0; y < P.ny; ++y)
      if (D.tuples.count({v, y})) sec |= bit(y);
    if (!P.costable(sec)) { i3 = false; w3 = {"section " + P.yname(v) + " _"}; }
  }
  rep.set("I3", i3, w3);

  if (!i1) {
    rep.set("I4", false, {"nu_tilde undefined (I1 fails)"});
    rep.set("I5", false, {"nu_tilde undefined (I1 fails)"});
    return rep;
  }
  bool i4 = true;
  std::vector<std::string> w4;
  for (int x = 0; x < P.nx; ++x)
    if (nu_tilde[nh[x]] != x) { i4 = false; w4 = {P.xname(x)}; break; }
  rep.set("I4", i4, w4);
  bool i5 = true;
  std::vector<std::string> w5;
  for (int y = 0; y < P.ny; ++y)
    if (nh[nu_tilde[y]] != y) { i5 = false; w5 = {P.yname(y)}; break; }
  rep.set("I5", i5, w5);
  return rep;
}

DistributivityReport upper_bound_relation(const Frame& F) {
  const Polarity& P = F.pol;
  SortedRelation R;
  R.sig = {Sort::X, Sort::X, Sort::X};
  for (int u = 0; u < P.nx; ++u)
    for (int x = 0; x < P.nx; ++x)
      for (int z = 0; z < P.nx; ++z)
        if (P.x_below(x, u) && P.x_below(z, u)) R.tuples.insert({u, x, z});
  SortedRelation D = galois_dual(P, R);

  DistributivityReport rep;
  rep.axiom_d = true;
  for (int x = 0; x < P.nx && rep.axiom_d; ++x)
    for (int z = 0; z < P.nx && rep.axiom_d; ++z)
      if (!P.costable(section(P, D, {-1, x, z})))
        rep.d_witness = {"section _ " + P.xname(x) + " " + P.xname(z)}, rep.axiom_d = false;
  for (int v = 0; v < P.ny && rep.axiom_d; ++v)
    for (int z = 0; z < P.nx && rep.axiom_d; ++z) {
      if (!P.stable(section(P, D, {v, -1, z})))
        rep.d_witness = {"section " + P.yname(v) + " _ " + P.xname(z)}, rep.axiom_d = false;
      if (rep.axiom_d && !P.stable(section(P, D, {v, z, -1})))
        rep.d_witness = {"section " + P.yname(v) + " " + P.xname(z) + " _"}, rep.axiom_d = false;
    }

  StableFamily fam = stable_family(P);
  rep.stable_lattice_distributive = true;
  auto meet = [&](Bits a, Bits b) { return a & b; };
  auto join = [&](Bits a, Bits b) { return P.closure_x(a | b); };
  for (Bits a : fam.stables)
    for (Bits b : fam.stables)
      for (Bits c : fam.stables)
        if (meet(a, join(b, c)) != join(meet(a, b), meet(a, c)))
          rep.stable_lattice_distributive = false;
  return rep;
}

std::string classify_frame(const Frame& F) {
  if (!check_table2(F).all_pass()) return "none";
  if (!check_table4_objects(F).all_pass()) return "none";
  bool g = perp_symmetric(F);
  bool inv = g && check_table3(F).all_pass();
  bool o = perp_irreflexive(F);
  bool d = upper_bound_relation(F).axiom_d;
  if (inv && o && d) return "SRF*_nuBA";
  if (inv && d) return "SRF*_nuDMA";
  if (inv && o) return "SRF*_nuO";
  if (inv) return "SRF*_nuINV";
  if (g) return "SRF*_nuG";
  return "SRF*_nuM";
}

bool CorrespondenceReport::all_directions_hold() const {
  return std::all_of(directions.begin(), directions.end(),
                     [](const auto& d) { return d.holds; });
}

CorrespondenceReport check_correspondence(const Frame& F) {
  const Polarity& P = F.pol;
  StableFamily fam = stable_family(P);
  CorrespondenceReport r;
  r.symmetric = perp_symmetric(F);
  r.irreflexive = perp_irreflexive(F);
  r.dne_sub = r.star_eq_triangle = r.cap_empty = r.star_involutive = true;
  for (Bits A : fam.stables) {
    Bits st = star(F, A);
    if (!subset(A, star(F, st))) r.dne_sub = false;
    if (st != triangle(F, A)) r.star_eq_triangle = false;
    if ((A & st) != 0) r.cap_empty = false;
    if (star(F, st) != A) r.star_involutive = false;
  }
  auto imp = [](bool p, bool q) { return !p || q; };
  r.directions = {
      {"symmetric->dne-sub", imp(r.symmetric, r.dne_sub)},
      {"dne-sub->symmetric", imp(r.dne_sub, r.symmetric)},
      {"symmetric->star-eq-triangle", imp(r.symmetric, r.star_eq_triangle)},
      {"star-eq-triangle->symmetric", imp(r.star_eq_triangle, r.symmetric)},
      {"irreflexive->cap-empty", imp(r.irreflexive, r.cap_empty)},
      {"cap-empty->irreflexive", imp(r.cap_empty, r.irreflexive)},
  };
  // involution correspondence only claimed under symmetry + Table 3
  auto nh = frame_nu_hat(F);
  bool table3 = false;
  if (nu_hat_total(nh)) table3 = check_table3(F).all_pass();
  r.directions.push_back({"sym-and-table3->star-involutive",
                          imp(r.symmetric && table3, r.star_involutive)});
  return r;
}

}  // namespace gdlab
