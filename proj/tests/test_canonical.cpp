#include "doctest.h"

#include <algorithm>

#include "gdlab/canonical.hpp"
#include "helpers.hpp"

using namespace gdlab;
using namespace fixtures;

TEST_CASE("filters and ideals of small chains are the principal ones") {
  FiniteLattice L = chain(4);
  auto fs = proper_filters(L);
  auto is = proper_ideals(L);
  CHECK(fs.size() == 3);
  CHECK(is.size() == 3);
  for (Bits f : fs) CHECK_FALSE(has(f, L.bottom()));
  for (Bits i : is) CHECK_FALSE(has(i, L.top()));
  // finite filters are principal: each is an upset
  for (int a = 1; a < L.size(); ++a)
    CHECK(std::find(fs.begin(), fs.end(), L.upset(a)) != fs.end());
}

TEST_CASE("pentagon has a non-principal-looking count too") {
  // filters of N5: up(a), up(b), up(c), up(1); all principal
  auto fs = proper_filters(n5());
  CHECK(fs.size() == 4);
}

TEST_CASE("canonical frame wiring on the Kleene chain") {
  FiniteLattice L = kleene4();
  CanonicalFrame cf = canonical_frame(L);
  CHECK(cf.frame.pol.nx == 3);
  CHECK(cf.frame.pol.ny == 3);
  CHECK(cf.representable);
  CHECK(nu_hat_total(cf.nu_hat));
  // x gal y iff filter meets ideal
  for (size_t x = 0; x < cf.filters.size(); ++x)
    for (size_t y = 0; y < cf.ideals.size(); ++y)
      CHECK(cf.frame.pol.rel((int)x, (int)y) == ((cf.filters[x] & cf.ideals[y]) != 0));
  // S_vee via nu on generators: y S x iff nu(gen x) in ideal y
  for (size_t x = 0; x < cf.filters.size(); ++x) {
    int g = -1;
    for (int a = 0; a < L.size(); ++a)
      if (L.upset(a) == cf.filters[x]) g = a;
    REQUIRE(g >= 0);
    for (size_t y = 0; y < cf.ideals.size(); ++y)
      CHECK(cf.frame.s_rel((int)y, (int)x) == has(cf.ideals[y], L.nu(g)));
  }
}

TEST_CASE("representation map verifies on the fixture gallery") {
  for (const FiniteLattice& L :
       {chain2(), kleene4(), boolean_algebra(3), n5_trivial(), benzene()}) {
    CanonicalFrame cf = canonical_frame(L);
    RepresentationMap m = representation_map(cf);
    CHECK((int)m.X_of.size() == L.size());
    CHECK(m.X_of[L.bottom()] == 0);
  }
}

TEST_CASE("representation holds even when nu_hat is partial") {
  // star and the representation identities are extensional; F2 is not needed
  FiniteLattice L = chain(3).with_nu({2, 2, 2});
  CanonicalFrame cf = canonical_frame(L);
  CHECK_FALSE(cf.representable);
  CHECK_NOTHROW(representation_map(cf));
}

TEST_CASE("canonical frame rejects missing or non-minimal nu") {
  CHECK_THROWS_WITH_AS(canonical_frame(chain(3)), doctest::Contains("nu"), Error);
  // antitone fails: nu identity on the 2-chain
  CHECK_THROWS_AS(canonical_frame(chain(2).with_nu({0, 1})), Error);
}

TEST_CASE("fsat: meet of enclosing opens equals Galois closure") {
  for (const FiniteLattice& L : {kleene4(), n5_trivial(), boolean_algebra(2),
                                 m3().with_nu(trivial_nu(m3()))}) {
    FsatReport r = fsat_check(canonical_frame(L));
    INFO((r.witness.empty() ? std::string() : r.witness.front()));
    CHECK(r.fsat_equals_closure);
    CHECK(r.stables_are_filters);
  }
}
