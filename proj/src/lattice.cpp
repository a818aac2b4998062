#include "gdlab/lattice.hpp"

#include <algorithm>

namespace gdlab {

namespace {

// Reflexive-transitive closure of a relation given as up-masks.
void close(std::vector<Bits>& up) {
  int n = (int)up.size();
  for (int a = 0; a < n; ++a) up[a] |= bit(a);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 0; a < n; ++a) {
      Bits acc = up[a];
      for_each_bit(up[a], [&](int b) { acc |= up[b]; });
      if (acc != up[a]) {
        up[a] = acc;
        changed = true;
      }
    }
  }
}

}  // namespace

FiniteLattice FiniteLattice::build(std::vector<std::string> names, std::vector<Bits> up,
                                   std::optional<std::vector<int>> nu) {
  FiniteLattice L;
  L.n_ = (int)names.size();
  int n = L.n_;
  if (n == 0) throw Error("NoBounds", "empty carrier");
  if (n > 63) throw Error("InputError", "carrier too large (max 63 elements)");
  close(up);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (has(up[a], b) && has(up[b], a))
        throw Error("NotAPoset", "antisymmetry fails between " + names[a] + " and " + names[b]);
  L.names_ = std::move(names);
  L.up_ = up;
  L.dn_.assign(n, 0);
  for (int a = 0; a < n; ++a)
    for_each_bit(up[a], [&](int b) { L.dn_[b] |= bit(a); });

  Bits all = full_mask(n);
  for (int a = 0; a < n; ++a) {
    if (L.up_[a] == all) L.bottom_ = a;
    if (L.dn_[a] == all) L.top_ = a;
  }
  if (L.bottom_ < 0 || L.top_ < 0)
    throw Error("NoBounds", L.bottom_ < 0 ? "no bottom element" : "no top element");
  if (L.bottom_ == L.top_) throw Error("NoBounds", "degenerate lattice: bottom = top");

  L.meet_.assign(n * n, -1);
  L.join_.assign(n * n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Bits lower = L.dn_[a] & L.dn_[b];
      int g = -1;
      for_each_bit(lower, [&](int c) {
        if (subset(lower, L.dn_[c])) g = c;
      });
      if (g < 0)
        throw Error("NotALattice",
                    "no meet of " + L.names_[a] + " and " + L.names_[b]);
      L.meet_[a * n + b] = g;
      Bits upper = L.up_[a] & L.up_[b];
      int j = -1;
      for_each_bit(upper, [&](int c) {
        if (subset(upper, L.up_[c])) j = c;
      });
      if (j < 0)
        throw Error("NotALattice",
                    "no join of " + L.names_[a] + " and " + L.names_[b]);
      L.join_[a * n + b] = j;
    }

  if (nu) {
    if ((int)nu->size() != n) throw Error("NuNotTotal", "nu must map every element");
    for (int v : *nu)
      if (v < 0 || v >= n) throw Error("NuNotTotal", "nu image out of range");
  }
  L.nu_ = std::move(nu);
  return L;
}

FiniteLattice FiniteLattice::from_leq_pairs(std::vector<std::string> names,
                                            const std::vector<std::pair<int, int>>& leq_pairs,
                                            std::optional<std::vector<int>> nu) {
  int n = (int)names.size();
  std::vector<Bits> up(n, 0);
  for (auto [a, b] : leq_pairs) {
    if (a < 0 || a >= n || b < 0 || b >= n) throw Error("InputError", "leq index out of range");
    up[a] |= bit(b);
  }
  return build(std::move(names), std::move(up), std::move(nu));
}

FiniteLattice FiniteLattice::from_cover_pairs(std::vector<std::string> names,
                                              const std::vector<std::pair<int, int>>& covers,
                                              std::optional<std::vector<int>> nu) {
  return from_leq_pairs(std::move(names), covers, std::move(nu));
}

FiniteLattice FiniteLattice::with_nu(std::vector<int> nu) const {
  FiniteLattice L = *this;
  if ((int)nu.size() != n_) throw Error("NuNotTotal", "nu must map every element");
  for (int v : nu)
    if (v < 0 || v >= n_) throw Error("NuNotTotal", "nu image out of range");
  L.nu_ = std::move(nu);
  return L;
}

FiniteLattice FiniteLattice::without_nu() const {
  FiniteLattice L = *this;
  L.nu_.reset();
  return L;
}

std::vector<std::pair<int, int>> FiniteLattice::leq_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < n_; ++a)
    for_each_bit(up_[a], [&](int b) {
      if (a != b) out.emplace_back(a, b);
    });
  return out;
}

std::vector<std::pair<int, int>> FiniteLattice::cover_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < n_; ++a)
    for_each_bit(up_[a], [&](int b) {
      if (a == b) return;
      // b covers a iff nothing sits strictly between
      Bits between = up_[a] & dn_[b] & ~bit(a) & ~bit(b);
      if (between == 0) out.emplace_back(a, b);
    });
  return out;
}

VarietyReport classify_variety(const FiniteLattice& L) {
  if (!L.has_nu()) throw Error("MissingNu", "classify_variety needs nu");
  int n = L.size();
  VarietyReport r;
  r.antitone = r.normal = r.join_demorgan = r.galois = r.involution = true;
  r.explosion = r.antilogism = r.dual_normal = r.meet_demorgan = r.dual_galois = true;
  r.normal = L.nu(L.bottom()) == L.top();
  r.dual_normal = L.nu(L.top()) == L.bottom();
  for (int a = 0; a < n; ++a) {
    if (!L.leq(a, L.nu(L.nu(a)))) r.galois = false;
    if (L.nu(L.nu(a)) != a) r.involution = false;
    if (!L.leq(L.nu(L.nu(a)), a)) r.dual_galois = false;
    if (L.meet(a, L.nu(a)) != L.bottom()) r.explosion = false;
    for (int b = 0; b < n; ++b) {
      if (L.leq(a, b) && !L.leq(L.nu(b), L.nu(a))) r.antitone = false;
      if (L.nu(L.join(a, b)) != L.meet(L.nu(a), L.nu(b))) r.join_demorgan = false;
      if (L.nu(L.meet(a, b)) != L.join(L.nu(a), L.nu(b))) r.meet_demorgan = false;
      for (int c = 0; c < n; ++c)
        if (L.leq(L.meet(a, b), c) && !L.leq(L.meet(a, L.nu(c)), L.nu(b)))
          r.antilogism = false;
    }
  }
  r.distributive = is_distributive(L);
  r.in_m = r.antitone && r.normal && r.join_demorgan;
  r.in_g = r.in_m && r.galois;
  r.in_inv = r.in_g && r.involution;
  r.in_dma = r.in_inv && r.distributive;
  r.in_o = r.in_inv && r.explosion;
  r.in_ba = r.in_inv && r.antilogism;
  r.in_m_dual = r.antitone && r.dual_normal && r.meet_demorgan;
  r.in_g_dual = r.in_m_dual && r.dual_galois;
  return r;
}

bool is_distributive(const FiniteLattice& L) {
  int n = L.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (L.meet(a, L.join(b, c)) != L.join(L.meet(a, b), L.meet(a, c))) return false;
  return true;
}

std::string most_specific_variety(const VarietyReport& r) {
  if (r.in_ba) return "BA";
  if (r.in_dma && r.in_o) return "BA";  // unreachable when flags are consistent
  if (r.in_dma) return "DMA";
  if (r.in_o) return "O";
  if (r.in_inv) return "INV";
  if (r.in_g) return "G";
  if (r.in_m) return "M";
  return "none";
}

std::vector<ImplicationCheck> verify_lemma1_consequences(const FiniteLattice& L) {
  if (!L.has_nu()) throw Error("MissingNu", "verify_lemma1_consequences needs nu");
  VarietyReport r = classify_variety(L);
  int n = L.size();
  bool adjunction = true;  // a <= nu b  iff  b <= nu a, for all a,b
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (L.leq(a, L.nu(b)) != L.leq(b, L.nu(a))) adjunction = false;

  auto implies = [](bool p, bool q) { return !p || q; };
  std::vector<ImplicationCheck> out;
  out.push_back({"galois-iff-adjunction (antitone nu)",
                 !r.antitone || (adjunction == r.galois)});
  out.push_back({"galois-implies-normal (antitone nu)",
                 implies(r.antitone && r.galois, r.normal)});
  out.push_back({"galois-implies-join-demorgan (antitone nu)",
                 implies(r.antitone && r.galois, r.join_demorgan)});
  out.push_back({"dual-galois-implies-meet-demorgan (antitone nu)",
                 implies(r.antitone && r.dual_galois, r.meet_demorgan)});
  out.push_back({"either-demorgan-implies-antitone",
                 implies(r.join_demorgan || r.meet_demorgan, r.antitone)});
  out.push_back({"antilogism-involution-implies-distributive",
                 implies(r.antilogism && r.involution, r.distributive)});
  out.push_back({"antilogism-involution-implies-explosion",
                 implies(r.antilogism && r.involution, r.explosion)});
  return out;
}

FiniteLattice dualize(const FiniteLattice& L) {
  FiniteLattice D = L;
  std::swap(D.up_, D.dn_);
  std::swap(D.meet_, D.join_);
  std::swap(D.bottom_, D.top_);
  return D;
}

}  // namespace gdlab
