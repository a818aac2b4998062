#include "gdlab/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace gdlab {

Variety variety_from_tag(const std::string& tag) {
  if (tag == "M") return Variety::M;
  if (tag == "G") return Variety::G;
  if (tag == "INV") return Variety::INV;
  if (tag == "O") return Variety::O;
  if (tag == "DMA") return Variety::DMA;
  if (tag == "BA") return Variety::BA;
  throw Error("InputError", "unknown variety tag '" + tag + "'");
}

std::string variety_tag(Variety v) {
  switch (v) {
    case Variety::M: return "M";
    case Variety::G: return "G";
    case Variety::INV: return "INV";
    case Variety::O: return "O";
    case Variety::DMA: return "DMA";
    case Variety::BA: return "BA";
  }
  return "?";
}

bool in_variety(const VarietyReport& vr, Variety v) {
  switch (v) {
    case Variety::M: return vr.in_m;
    case Variety::G: return vr.in_g;
    case Variety::INV: return vr.in_inv;
    case Variety::O: return vr.in_o;
    case Variety::DMA: return vr.in_dma;
    case Variety::BA: return vr.in_ba;
  }
  return false;
}

namespace {

const char* kMiddleNames[] = {"a", "b", "c", "d", "e", "f", "g", "h"};

// canonical form of the order matrix, minimized over permutations of the
// middle elements (bottom and top are rigid)
std::uint64_t order_code(const FiniteLattice& L, const std::vector<int>& perm) {
  std::uint64_t code = 0;
  int n = L.size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      code = (code << 1) | (L.leq(perm[i], perm[j]) ? 1u : 0u);
  return code;
}

std::uint64_t canonical_order_code(const FiniteLattice& L) {
  int n = L.size();
  std::vector<int> mids(std::max(0, n - 2));
  std::iota(mids.begin(), mids.end(), 1);
  std::uint64_t best = ~0ull;
  std::vector<int> perm(n);
  do {
    perm[0] = 0;
    for (size_t i = 0; i < mids.size(); ++i) perm[i + 1] = mids[i];
    perm[n - 1] = n - 1;
    best = std::min(best, order_code(L, perm));
  } while (std::next_permutation(mids.begin(), mids.end()));
  return best;
}

}  // namespace

std::vector<FiniteLattice> enumerate_lattices(int max_size) {
  if (max_size > 8) throw Error("InputError", "lattice enumeration capped at 8 elements");
  std::vector<FiniteLattice> out;
  for (int n = 2; n <= max_size; ++n) {
    std::vector<std::string> names;
    names.push_back("0");
    for (int i = 1; i < n - 1; ++i) names.push_back(kMiddleNames[i - 1]);
    names.push_back("1");

    int m = n - 2;
    std::vector<std::pair<int, int>> slots;  // ordered middle pairs
    for (int i = 1; i <= m; ++i)
      for (int j = 1; j <= m; ++j)
        if (i != j) slots.emplace_back(i, j);

    std::vector<std::pair<std::uint64_t, FiniteLattice>> found;
    std::set<std::uint64_t> seen;
    for (Bits mask = 0; mask <= full_mask((int)slots.size()); ++mask) {
      std::vector<std::pair<int, int>> leq;
      for (int i = 0; i < n; ++i) {
        leq.emplace_back(0, i);
        leq.emplace_back(i, n - 1);
        leq.emplace_back(i, i);
      }
      for (size_t k = 0; k < slots.size(); ++k)
        if (has(mask, (int)k)) leq.push_back(slots[k]);
      try {
        FiniteLattice L = FiniteLattice::from_leq_pairs(names, leq);
        std::uint64_t code = canonical_order_code(L);
        if (seen.insert(code).second) found.emplace_back(code, std::move(L));
      } catch (const Error&) {
        // not a poset / not a lattice
      }
      if (slots.empty()) break;
    }
    std::sort(found.begin(), found.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& p : found) out.push_back(std::move(p.second));
  }
  return out;
}

std::vector<std::vector<int>> automorphisms(const FiniteLattice& L) {
  int n = L.size();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j)
        if (L.leq(i, j) != L.leq(perm[i], perm[j])) ok = false;
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<std::vector<int>> nu_maps(const FiniteLattice& L, Variety cls) {
  int n = L.size();
  auto auts = automorphisms(L);
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> out;

  std::vector<int> nu(n, 0);
  for (;;) {
    VarietyReport vr = classify_variety(L.with_nu(nu));
    if (in_variety(vr, cls)) {
      std::vector<int> best = nu;
      for (const auto& p : auts) {
        std::vector<int> inv(n);
        for (int i = 0; i < n; ++i) inv[p[i]] = i;
        std::vector<int> cand(n);
        for (int i = 0; i < n; ++i) cand[i] = p[nu[inv[i]]];
        best = std::min(best, cand);
      }
      if (seen.insert(best).second) out.push_back(best);
    }
    int i = 0;
    while (i < n && ++nu[i] == n) nu[i++] = 0;
    if (i == n) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

void for_each_algebra(int max_size, Variety cls,
                      const std::function<bool(const FiniteLattice&)>& f) {
  for (const FiniteLattice& L : enumerate_lattices(max_size))
    for (const auto& nu : nu_maps(L, cls))
      if (!f(L.with_nu(nu))) return;
}

}  // namespace gdlab
