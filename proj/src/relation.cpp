#include "gdlab/relation.hpp"

namespace gdlab {

SortedRelation galois_dual(const Polarity& P, const SortedRelation& R) {
  for (size_t i = 0; i < R.sig.size(); ++i) {
    int cap = carrier_size(P, R.sig[i]);
    for (const auto& t : R.tuples)
      if (t[i] < 0 || t[i] >= cap) throw Error("SortMismatch", "tuple violates sort signature");
  }
  SortedRelation D;
  D.sig = R.sig;
  D.sig[0] = flip(R.sig[0]);
  int ar = R.arity();
  // enumerate every argument combination; empty sections prime to the full
  // opposite carrier, so absent combinations still contribute
  std::vector<int> args(ar, 0);
  std::vector<int> caps(ar);
  for (int k = 0; k < ar; ++k) caps[k] = carrier_size(P, R.sig[k + 1]);
  auto emit = [&]() {
    Bits sec = 0;
    for (const auto& t : R.tuples) {
      bool match = true;
      for (int k = 0; k < ar; ++k)
        if (t[k + 1] != args[k]) { match = false; break; }
      if (match) sec |= bit(t[0]);
    }
    Bits primed = R.sig[0] == Sort::X ? P.prime_x(sec) : P.prime_y(sec);
    for_each_bit(primed, [&](int u) {
      std::vector<int> t(ar + 1);
      t[0] = u;
      for (int k = 0; k < ar; ++k) t[k + 1] = args[k];
      D.tuples.insert(t);
    });
  };
  // odometer over argument carriers
  while (true) {
    emit();
    int k = ar - 1;
    while (k >= 0 && ++args[k] == caps[k]) args[k--] = 0;
    if (k < 0) break;
  }
  return D;
}

Bits section(const Polarity& P, const SortedRelation& R, const std::vector<int>& pattern) {
  if (pattern.size() != R.sig.size())
    throw Error("IndexOutOfRange", "pattern length must match relation width");
  int hole = -1;
  for (size_t i = 0; i < pattern.size(); ++i)
    if (pattern[i] == -1) {
      if (hole >= 0) throw Error("IndexOutOfRange", "pattern must have exactly one hole");
      hole = (int)i;
    }
  if (hole < 0) throw Error("IndexOutOfRange", "pattern must have exactly one hole");
  (void)carrier_size(P, R.sig[hole]);
  Bits out = 0;
  for (const auto& t : R.tuples) {
    bool match = true;
    for (size_t i = 0; i < t.size(); ++i)
      if ((int)i != hole && t[i] != pattern[i]) { match = false; break; }
    if (match) out |= bit(t[hole]);
  }
  return out;
}

}  // namespace gdlab
