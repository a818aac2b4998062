#pragma once

#include <functional>
#include <string>
#include <vector>

#include "gdlab/lattice.hpp"

namespace gdlab {

enum class Variety { M, G, INV, O, DMA, BA };

Variety variety_from_tag(const std::string& tag);  // throws InputError
std::string variety_tag(Variety v);
bool in_variety(const VarietyReport& vr, Variety v);

// All bounded lattices on 2..max_size elements up to isomorphism, in a
// deterministic order (size, then canonical form of the order matrix).
std::vector<FiniteLattice> enumerate_lattices(int max_size);

// All nu maps on L satisfying the laws of the class, reduced modulo Aut(L),
// lexicographically ordered by canonical representative.
std::vector<std::vector<int>> nu_maps(const FiniteLattice& L, Variety cls);

// Deterministic stream of (lattice, nu) pairs in the class; the callback
// returns false to stop early.
void for_each_algebra(int max_size, Variety cls,
                      const std::function<bool(const FiniteLattice&)>& f);

std::vector<std::vector<int>> automorphisms(const FiniteLattice& L);

}  // namespace gdlab
