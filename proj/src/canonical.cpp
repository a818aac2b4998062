#include "gdlab/canonical.hpp"

#include <algorithm>

namespace gdlab {

namespace {

void sort_sets(std::vector<Bits>& v) {
  std::sort(v.begin(), v.end(), [](Bits a, Bits b) {
    if (popcount(a) != popcount(b)) return popcount(a) < popcount(b);
    return a < b;
  });
}

int index_of(const std::vector<Bits>& v, Bits s) {
  auto it = std::find(v.begin(), v.end(), s);
  return it == v.end() ? -1 : (int)(it - v.begin());
}

// generator of a filter/ideal: the meet (resp. join) of its members
int filter_generator(const FiniteLattice& L, Bits f) {
  int g = L.top();
  for_each_bit(f, [&](int a) { g = L.meet(g, a); });
  return g;
}

std::string elem_set_name(const FiniteLattice& L, Bits s) {
  std::string out = "{";
  bool first = true;
  for_each_bit(s, [&](int a) {
    if (!first) out += ",";
    first = false;
    out += L.name(a);
  });
  return out + "}";
}

}  // namespace

std::vector<Bits> proper_filters(const FiniteLattice& L) {
  int n = L.size();
  if (n > 16) throw Error("InputError", "filter enumeration capped at 16 elements");
  std::vector<Bits> out;
  for (Bits s = 0; s <= full_mask(n); ++s) {
    if (!has(s, L.top()) || has(s, L.bottom())) continue;
    bool ok = true;
    for_each_bit(s, [&](int a) {
      if (!subset(L.upset(a), s)) ok = false;  // upward closed
      for_each_bit(s, [&](int b) {
        if (!has(s, L.meet(a, b))) ok = false;  // meet closed
      });
    });
    if (ok) out.push_back(s);
  }
  sort_sets(out);
  return out;
}

std::vector<Bits> proper_ideals(const FiniteLattice& L) {
  auto v = proper_filters(dualize(L));
  sort_sets(v);
  return v;
}

Bits CanonicalFrame::rep_X(int a) const {
  Bits out = 0;
  for (size_t i = 0; i < filters.size(); ++i)
    if (has(filters[i], a)) out |= bit((int)i);
  return out;
}

Bits CanonicalFrame::rep_Y(int a) const {
  Bits out = 0;
  for (size_t i = 0; i < ideals.size(); ++i)
    if (has(ideals[i], a)) out |= bit((int)i);
  return out;
}

CanonicalFrame canonical_frame(const FiniteLattice& L) {
  if (!L.has_nu()) throw Error("MissingNu", "canonical frame needs nu");
  VarietyReport vr = classify_variety(L);
  if (!vr.in_m)
    throw Error("NotMinimalVariety",
                "nu is not a minimal quasi-complementation (antitone/normal/join-demorgan)");

  CanonicalFrame cf;
  cf.source = L;
  cf.filters = proper_filters(L);
  cf.ideals = proper_ideals(L);
  int nx = (int)cf.filters.size(), ny = (int)cf.ideals.size();
  if (nx > 63 || ny > 63) throw Error("InputError", "canonical frame too large");

  std::vector<std::pair<int, int>> gal;
  for (int x = 0; x < nx; ++x)
    for (int y = 0; y < ny; ++y)
      if (cf.filters[x] & cf.ideals[y]) gal.emplace_back(x, y);
  Polarity P = Polarity::make(nx, ny, gal);
  for (int x = 0; x < nx; ++x) P.xnames.push_back(elem_set_name(L, cf.filters[x]));
  for (int y = 0; y < ny; ++y) P.ynames.push_back(elem_set_name(L, cf.ideals[y]));

  cf.x_of_elem.assign(L.size(), -1);
  cf.y_of_elem.assign(L.size(), -1);
  for (int a = 0; a < L.size(); ++a) {
    if (a != L.bottom()) cf.x_of_elem[a] = index_of(cf.filters, L.upset(a));
    if (a != L.top()) cf.y_of_elem[a] = index_of(cf.ideals, L.downset(a));
  }

  // S_vee by the elementwise condition: y S x iff nu[a] in y for every a in x
  std::vector<Bits> s_x(nx, 0);
  for (int x = 0; x < nx; ++x)
    for (int y = 0; y < ny; ++y) {
      bool all = true;
      for_each_bit(cf.filters[x], [&](int a) {
        if (!has(cf.ideals[y], L.nu(a))) all = false;
      });
      if (all) s_x[x] |= bit(y);
    }

  // point operator: the ideal generated by the nu-image of the filter, which
  // is the downset of nu(generator); improper exactly when that value is top
  cf.nu_hat.assign(nx, -1);
  for (int x = 0; x < nx; ++x) {
    int g = filter_generator(L, cf.filters[x]);
    int img = L.nu(g);
    if (img == L.top()) {
      cf.representable = false;
    } else {
      cf.nu_hat[x] = index_of(cf.ideals, L.downset(img));
    }
    // cross-check the two definitions of S_vee
    Bits via_ideal = 0;
    if (cf.nu_hat[x] >= 0) {
      for (int y = 0; y < ny; ++y)
        if (subset(cf.ideals[cf.nu_hat[x]], cf.ideals[y])) via_ideal |= bit(y);
    }
    if (via_ideal != s_x[x])
      throw Error("InternalError", "canonical S_vee definitions disagree");
  }

  cf.frame = Frame::make_from_sections(std::move(P), std::move(s_x));
  return cf;
}

RepresentationMap representation_map(const CanonicalFrame& cf) {
  const FiniteLattice& L = cf.source;
  const Polarity& P = cf.frame.pol;
  int n = L.size();
  RepresentationMap m;
  m.X_of.resize(n);
  m.Y_of.resize(n);
  for (int a = 0; a < n; ++a) {
    m.X_of[a] = cf.rep_X(a);
    m.Y_of[a] = cf.rep_Y(a);
  }
  auto fail = [&](const std::string& what) {
    throw Error("RepresentationFailure", what);
  };
  if (m.X_of[L.bottom()] != 0) fail("X_0 not empty");
  if (m.X_of[L.top()] != P.xmask()) fail("X_1 not full");
  for (int a = 0; a < n; ++a) {
    if (cf.x_of_elem[a] >= 0 && m.X_of[a] != P.gamma_x(cf.x_of_elem[a]))
      fail("X_a is not the closure of the principal filter");
    for (int b = 0; b < n; ++b) {
      if ((m.X_of[a] == m.X_of[b]) != (a == b)) fail("a -> X_a not injective");
      if (L.leq(a, b) != subset(m.X_of[a], m.X_of[b])) fail("order embedding fails");
      if (m.X_of[L.meet(a, b)] != (m.X_of[a] & m.X_of[b])) fail("meet identity fails");
      if (m.X_of[L.join(a, b)] != P.closure_x(m.X_of[a] | m.X_of[b])) fail("join identity fails");
    }
    if (star(cf.frame, m.X_of[a]) != m.X_of[L.nu(a)]) fail("star of X_a is not X_{nu a}");
  }
  // bijectivity onto the stable family (finite lattices are their own
  // canonical extensions)
  StableFamily fam = stable_family(P);
  if ((int)fam.stables.size() != n) fail("stable family size differs from carrier");
  for (int a = 0; a < n; ++a)
    if (fam.index_stable(m.X_of[a]) < 0) fail("X_a not in the stable family");
  return m;
}

FsatReport fsat_check(const CanonicalFrame& cf) {
  const Polarity& P = cf.frame.pol;
  FsatReport rep;
  if (P.nx > 20) throw Error("InputError", "fsat_check capped at 20 filters");
  for (Bits U = 0; U <= P.xmask(); ++U) {
    Bits fsat = P.xmask();
    for (int y = 0; y < P.ny; ++y)
      if (subset(U, P.ycol[y])) fsat &= P.ycol[y];
    if (fsat != P.closure_x(U)) {
      rep.fsat_equals_closure = false;
      rep.witness = {"U=" + P.set_name_x(U)};
      break;
    }
  }
  StableFamily fam = stable_family(P);
  for (Bits A : fam.stables) {
    // upward closed in filter inclusion and closed under filter intersection
    for_each_bit(A, [&](int x) {
      for (int z = 0; z < P.nx; ++z)
        if (subset(cf.filters[x], cf.filters[z]) && !has(A, z))
          rep.stables_are_filters = false;
      for_each_bit(A, [&](int z) {
        Bits inter = cf.filters[x] & cf.filters[z];
        int idx = -1;
        for (int u = 0; u < P.nx; ++u)
          if (cf.filters[u] == inter) idx = u;
        if (idx < 0 || !has(A, idx)) rep.stables_are_filters = false;
      });
    });
  }
  return rep;
}

}  // namespace gdlab
