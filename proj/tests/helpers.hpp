#pragma once

#include <string>
#include <vector>

#include "gdlab/lattice.hpp"

namespace fixtures {

using gdlab::FiniteLattice;

inline FiniteLattice chain(int n) {
  static const char* mids[] = {"a", "b", "c", "d"};
  std::vector<std::string> names{"0"};
  for (int i = 1; i < n - 1; ++i) names.push_back(mids[i - 1]);
  names.push_back("1");
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i + 1 < n; ++i) covers.emplace_back(i, i + 1);
  return FiniteLattice::from_cover_pairs(names, covers);
}

// nu 0 = 1, nu x = 0 otherwise
inline std::vector<int> trivial_nu(const FiniteLattice& L) {
  std::vector<int> nu(L.size(), L.bottom());
  nu[L.bottom()] = L.top();
  return nu;
}

inline FiniteLattice chain2() { return chain(2).with_nu({1, 0}); }

// 0 < a < b < 1 with nu swapping a and b: the Kleene chain
inline FiniteLattice kleene4() { return chain(4).with_nu({3, 2, 1, 0}); }

// subsets of a k-element set with complement
inline FiniteLattice boolean_algebra(int k) {
  int n = 1 << k;
  std::vector<std::string> names;
  for (int s = 0; s < n; ++s) {
    std::string nm = "{";
    for (int i = 0; i < k; ++i)
      if (s & (1 << i)) nm += std::string(1, char('x' + i));
    names.push_back(nm + "}");
  }
  std::vector<std::pair<int, int>> leq;
  std::vector<int> nu;
  for (int s = 0; s < n; ++s) {
    nu.push_back((n - 1) & ~s);
    for (int t = 0; t < n; ++t)
      if ((s & t) == s) leq.emplace_back(s, t);
  }
  return FiniteLattice::from_leq_pairs(names, leq, nu);
}

// pentagon: 0 < a < c < 1, 0 < b < 1
inline FiniteLattice n5() {
  return FiniteLattice::from_cover_pairs({"0", "a", "b", "c", "1"},
                                         {{0, 1}, {1, 3}, {3, 4}, {0, 2}, {2, 4}});
}
inline FiniteLattice n5_trivial() {
  FiniteLattice L = n5();
  return L.with_nu(trivial_nu(L));
}

// benzene O6: 0 < a < b < 1, 0 < c < d < 1, nu: a<->d, b<->c, 0<->1
inline FiniteLattice benzene() {
  return FiniteLattice::from_cover_pairs(
             {"0", "a", "b", "c", "d", "1"},
             {{0, 1}, {1, 2}, {2, 5}, {0, 3}, {3, 4}, {4, 5}})
      .with_nu({5, 4, 3, 2, 1, 0});
}

// three atoms
inline FiniteLattice m3() {
  return FiniteLattice::from_cover_pairs({"0", "a", "b", "c", "1"},
                                         {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
}

}  // namespace fixtures
