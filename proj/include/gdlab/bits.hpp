#pragma once

#include <bit>
#include <cstdint>

namespace gdlab {

// Subsets of an indexed carrier (at most 63 points) as word-sized bitmasks.
using Bits = std::uint64_t;

constexpr Bits bit(int i) { return Bits{1} << i; }
constexpr bool has(Bits s, int i) { return (s >> i) & 1; }
constexpr Bits full_mask(int n) { return n == 0 ? 0 : (~Bits{0} >> (64 - n)); }
constexpr bool subset(Bits a, Bits b) { return (a & ~b) == 0; }
constexpr int popcount(Bits s) { return std::popcount(s); }

template <class F>
void for_each_bit(Bits s, F&& f) {
  while (s) {
    int i = std::countr_zero(s);
    f(i);
    s &= s - 1;
  }
}

}  // namespace gdlab
