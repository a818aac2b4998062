#pragma once

#include <string>
#include <vector>

#include "gdlab/canonical.hpp"
#include "gdlab/complex_algebra.hpp"
#include "gdlab/frame.hpp"
#include "gdlab/lattice.hpp"

namespace gdlab {

struct LatticeHom {
  FiniteLattice source, target;
  std::vector<int> map;
};
// Validates preservation of order, meet, join, bounds and nu (when both
// sides carry nu); throws HomInvalid.
LatticeHom make_hom(FiniteLattice source, FiniteLattice target, std::vector<int> map);

// Sorted pair between frames; p maps source X-points to target X-points.
struct FrameMorphism {
  Frame source, target;
  std::vector<int> p, q;
};

// Contravariant dual of h : A -> B: a morphism from the canonical frame of B
// to the canonical frame of A, by inverse image on filters and ideals.
FrameMorphism dual_frame_morphism(const LatticeHom& h, const CanonicalFrame& cfA,
                                  const CanonicalFrame& cfB);

AxiomReport check_morphism_axioms(const FrameMorphism& m);  // M1..M5

// L(pi) = pi^{-1}: a hom from the complex algebra of the target frame to the
// complex algebra of the source frame; also checks clopen preservation.
LatticeHom inverse_image_hom(const FrameMorphism& m);

bool unit_iso_check(const FiniteLattice& L);

struct CounitReport {
  bool ok = false;
  std::string detail;
};
CounitReport counit_iso_check(const Frame& F);

struct RoundtripReport {
  std::string algebra_variety;      // most specific variety of L
  std::string frame_category;      // classify_frame of the canonical frame
  std::string double_dual_variety;  // most specific variety of the complex algebra
  bool frame_matches = false;       // frame category corresponds to the variety
  bool unit_ok = false;
  bool counit_ok = false;
};
RoundtripReport roundtrip(const FiniteLattice& L);

}  // namespace gdlab
