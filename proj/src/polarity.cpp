#include "gdlab/polarity.hpp"

#include <algorithm>
#include <set>

namespace gdlab {

Polarity Polarity::make(int nx, int ny, const std::vector<std::pair<int, int>>& gal) {
  if (nx < 0 || ny < 0 || nx > 63 || ny > 63)
    throw Error("InputError", "carrier size out of range (max 63 per sort)");
  Polarity P;
  P.nx = nx;
  P.ny = ny;
  P.xrow.assign(nx, 0);
  P.ycol.assign(ny, 0);
  for (auto [x, y] : gal) {
    if (x < 0 || x >= nx || y < 0 || y >= ny)
      throw Error("InputError", "gal pair out of range");
    P.xrow[x] |= bit(y);
    P.ycol[y] |= bit(x);
  }
  return P;
}

bool Polarity::separated() const {
  for (int x = 0; x < nx; ++x)
    for (int z = x + 1; z < nx; ++z)
      if (xrow[x] == xrow[z]) return false;
  for (int y = 0; y < ny; ++y)
    for (int v = y + 1; v < ny; ++v)
      if (ycol[y] == ycol[v]) return false;
  return true;
}

std::string Polarity::set_name_x(Bits U) const {
  std::string s = "{";
  bool first = true;
  for_each_bit(U, [&](int x) {
    if (!first) s += ",";
    first = false;
    s += xname(x);
  });
  return s + "}";
}

std::string Polarity::set_name_y(Bits V) const {
  std::string s = "{";
  bool first = true;
  for_each_bit(V, [&](int y) {
    if (!first) s += ",";
    first = false;
    s += yname(y);
  });
  return s + "}";
}

namespace {

// Moore-family generation: close the generator list under pairwise
// intersection, seeded with the full carrier.
std::vector<Bits> intersection_closure(Bits top, const std::vector<Bits>& gens) {
  std::set<Bits> fam;
  fam.insert(top);
  for (Bits g : gens) fam.insert(g);
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Bits> cur(fam.begin(), fam.end());
    for (size_t i = 0; i < cur.size(); ++i)
      for (size_t j = i + 1; j < cur.size(); ++j)
        if (fam.insert(cur[i] & cur[j]).second) changed = true;
  }
  std::vector<Bits> out(fam.begin(), fam.end());
  std::sort(out.begin(), out.end(), [](Bits a, Bits b) {
    if (popcount(a) != popcount(b)) return popcount(a) < popcount(b);
    return a < b;
  });
  return out;
}

}  // namespace

StableFamily stable_family(const Polarity& P) {
  std::vector<Bits> xgens, ygens;
  for (int y = 0; y < P.ny; ++y) xgens.push_back(P.ycol[y]);  // open elements '{y}
  for (int x = 0; x < P.nx; ++x) ygens.push_back(P.xrow[x]);  // open elements {x}'
  StableFamily F;
  F.stables = intersection_closure(P.xmask(), xgens);
  F.costables = intersection_closure(P.ymask(), ygens);
  return F;
}

int StableFamily::index_stable(Bits A) const {
  auto it = std::find(stables.begin(), stables.end(), A);
  return it == stables.end() ? -1 : (int)(it - stables.begin());
}

int StableFamily::index_costable(Bits B) const {
  auto it = std::find(costables.begin(), costables.end(), B);
  return it == costables.end() ? -1 : (int)(it - costables.begin());
}

}  // namespace gdlab
