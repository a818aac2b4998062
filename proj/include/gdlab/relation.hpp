#pragma once

#include <set>
#include <vector>

#include "gdlab/polarity.hpp"

namespace gdlab {

enum class Sort { X, Y };
inline Sort flip(Sort s) { return s == Sort::X ? Sort::Y : Sort::X; }
inline int carrier_size(const Polarity& P, Sort s) { return s == Sort::X ? P.nx : P.ny; }

// Relation over the two sorts; sig[0] is the sort of the output coordinate,
// sig[1..] the argument coordinates. Tuples are (output, args...).
struct SortedRelation {
  std::vector<Sort> sig;
  std::set<std::vector<int>> tuples;
  int arity() const { return (int)sig.size() - 1; }
};

// Galois dual R': uR'v... iff every w with wRv... is gal-incident to u.
// Sectionwise: R'v = (Rv)'.
SortedRelation galois_dual(const Polarity& P, const SortedRelation& R);

// Section with one hole: pattern has exactly one entry equal to -1; returns
// the set of values filling the hole, as Bits over that coordinate's carrier.
Bits section(const Polarity& P, const SortedRelation& R, const std::vector<int>& pattern);

}  // namespace gdlab
