#include "doctest.h"

#include "gdlab/polarity.hpp"

using namespace gdlab;

namespace {

// 3x3 "non-identity" polarity: x gal y iff x != y
Polarity tri() {
  std::vector<std::pair<int, int>> gal;
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      if (x != y) gal.emplace_back(x, y);
  return Polarity::make(3, 3, gal);
}

}  // namespace

TEST_CASE("prime maps form a Galois connection") {
  Polarity P = tri();
  for (Bits U = 0; U <= P.xmask(); ++U)
    for (Bits V = 0; V <= P.ymask(); ++V)
      CHECK(subset(U, P.prime_y(V)) == subset(V, P.prime_x(U)));
  for (Bits U = 0; U <= P.xmask(); ++U)
    for (Bits W = 0; W <= P.xmask(); ++W)
      if (subset(U, W)) CHECK(subset(P.prime_x(W), P.prime_x(U)));
  for (Bits U = 0; U <= P.xmask(); ++U) {
    CHECK(subset(U, P.closure_x(U)));
    CHECK(P.closure_x(P.closure_x(U)) == P.closure_x(U));
    CHECK(P.prime_x(P.closure_x(U)) == P.prime_x(U));
  }
}

TEST_CASE("stable family of the tri polarity") {
  Polarity P = tri();
  // '{y} = the two points other than y; closures generate singletons too
  StableFamily fam = stable_family(P);
  for (Bits A : fam.stables) CHECK(P.stable(A));
  CHECK(fam.stables.front() == P.closure_x(0));
  CHECK(fam.stables.back() == P.xmask());
  // intersections of members stay in the family
  for (Bits A : fam.stables)
    for (Bits B : fam.stables) CHECK(fam.index_stable(A & B) >= 0);
  // every stable set found by brute force is in the family
  int count = 0;
  for (Bits U = 0; U <= P.xmask(); ++U)
    if (P.stable(U)) {
      ++count;
      CHECK(fam.index_stable(U) >= 0);
    }
  CHECK((int)fam.stables.size() == count);
}

TEST_CASE("specialization and separation") {
  Polarity P = tri();
  CHECK(P.separated());  // distinct rows/columns
  for (int x = 0; x < 3; ++x) {
    CHECK(P.gamma_x(x) == P.closure_x(bit(x)));
    CHECK(P.x_below(x, x));
  }
  // a polarity with duplicate rows is not separated
  Polarity Q = Polarity::make(2, 1, {{0, 0}, {1, 0}});
  CHECK_FALSE(Q.separated());
}

TEST_CASE("empty-section conventions") {
  // x1 relates to nothing: {x1}' = empty, ''{x1} closes to everything with empty prime
  Polarity P = Polarity::make(2, 1, {{0, 0}});
  CHECK(P.prime_x(bit(1)) == 0);
  CHECK(P.prime_y(0) == P.xmask());
  CHECK(P.closure_x(bit(1)) == P.xmask());
}
