#include "doctest.h"

#include "gdlab/lattice.hpp"
#include "helpers.hpp"

using namespace gdlab;
using namespace fixtures;

TEST_CASE("2-chain with swap nu is the smallest Boolean algebra") {
  FiniteLattice L = chain2();
  CHECK(L.size() == 2);
  CHECK(L.bottom() == 0);
  CHECK(L.top() == 1);
  VarietyReport vr = classify_variety(L);
  CHECK(vr.in_ba);
  CHECK(most_specific_variety(vr) == "BA");
}

TEST_CASE("pentagon is a valid non-distributive lattice") {
  FiniteLattice L = n5();
  CHECK(L.size() == 5);
  CHECK_FALSE(is_distributive(L));
  // a < c, b incomparable to both
  CHECK(L.leq(1, 3));
  CHECK_FALSE(L.leq(2, 3));
  CHECK_FALSE(L.leq(3, 2));
}

TEST_CASE("meet and join are greatest lower / least upper bounds") {
  for (const FiniteLattice& L : {n5(), m3(), benzene().without_nu(), chain(4)}) {
    for (int a = 0; a < L.size(); ++a)
      for (int b = 0; b < L.size(); ++b) {
        int m = L.meet(a, b), j = L.join(a, b);
        CHECK(L.leq(m, a));
        CHECK(L.leq(m, b));
        CHECK(L.leq(a, j));
        CHECK(L.leq(b, j));
        for (int c = 0; c < L.size(); ++c) {
          if (L.leq(c, a) && L.leq(c, b)) CHECK(L.leq(c, m));
          if (L.leq(a, c) && L.leq(b, c)) CHECK(L.leq(j, c));
        }
      }
  }
}

TEST_CASE("rejections: poset, bounds, lattice, nu totality") {
  CHECK_THROWS_WITH_AS(
      FiniteLattice::from_leq_pairs({"x", "y"}, {{0, 1}, {1, 0}}, std::nullopt),
      doctest::Contains("antisym"), Error);
  // two maximal elements: no top
  CHECK_THROWS_AS(FiniteLattice::from_leq_pairs({"0", "x", "y"}, {{0, 1}, {0, 2}},
                                                std::nullopt),
                  Error);
  // 0 < a,b < c,d < 1: c and d have no unique meet
  CHECK_THROWS_AS(
      FiniteLattice::from_cover_pairs(
          {"0", "a", "b", "c", "d", "1"},
          {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 5}, {4, 5}}, std::nullopt),
      Error);
  CHECK_THROWS_AS(chain(2).with_nu({0}), Error);
  CHECK_THROWS_AS(chain(2).with_nu({0, 5}), Error);
  // a single point has no distinct bounds
  CHECK_THROWS_AS(FiniteLattice::from_leq_pairs({"x"}, {{0, 0}}, std::nullopt), Error);
}

TEST_CASE("variety classification of the named instances") {
  CHECK(most_specific_variety(classify_variety(kleene4())) == "DMA");
  CHECK_FALSE(classify_variety(kleene4()).in_o);  // a & nu a = a != 0

  VarietyReport bz = classify_variety(benzene());
  CHECK(bz.in_o);
  CHECK_FALSE(bz.distributive);
  CHECK(most_specific_variety(bz) == "O");

  CHECK(most_specific_variety(classify_variety(boolean_algebra(2))) == "BA");
  CHECK(most_specific_variety(classify_variety(boolean_algebra(3))) == "BA");

  // nu x = (x = 0 ? 1 : 0) satisfies a <= nu nu a, so it lands in G
  VarietyReport tn = classify_variety(n5_trivial());
  CHECK(tn.in_m);
  CHECK(tn.galois);
  CHECK(tn.in_g);
  CHECK_FALSE(tn.involution);
  CHECK(most_specific_variety(tn) == "G");
}

TEST_CASE("dual-minimal membership") {
  VarietyReport k = classify_variety(kleene4());
  CHECK(k.in_m_dual);
  CHECK(k.in_g_dual);
  VarietyReport tn = classify_variety(n5_trivial());
  CHECK(tn.dual_normal);
  CHECK_FALSE(tn.meet_demorgan);  // nu(a & b) = 1 but nu a | nu b = 0
  CHECK_FALSE(tn.in_m_dual);
}

TEST_CASE("lemma consequences hold on every fixture") {
  for (const FiniteLattice& L :
       {chain2(), kleene4(), boolean_algebra(3), n5_trivial(), benzene(),
        m3().with_nu(trivial_nu(m3()))})
    for (const auto& c : verify_lemma1_consequences(L)) {
      INFO(c.name);
      CHECK(c.holds);
    }
}

TEST_CASE("dualize is involutive and swaps the bounds") {
  for (const FiniteLattice& L : {n5(), m3(), chain(5)}) {
    FiniteLattice D = dualize(L);
    CHECK(D.bottom() == L.top());
    CHECK(D.top() == L.bottom());
    CHECK(dualize(D) == L);
    for (int a = 0; a < L.size(); ++a)
      for (int b = 0; b < L.size(); ++b) {
        CHECK(D.leq(a, b) == L.leq(b, a));
        CHECK(D.meet(a, b) == L.join(a, b));
      }
  }
}

TEST_CASE("cover pairs regenerate the order") {
  for (const FiniteLattice& L : {n5(), benzene().without_nu(), boolean_algebra(3).without_nu()}) {
    FiniteLattice R = FiniteLattice::from_cover_pairs(L.names(), L.cover_pairs());
    CHECK(R == L);
  }
}
