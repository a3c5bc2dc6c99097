#include <doctest.h>

#include "hyspec/ring.hpp"

using namespace hyspec;

TEST_CASE("Z12 basic arithmetic") {
  FiniteRing r = build_ring(RingSpec::zn(12));
  CHECK(r.size() == 12);
  CHECK(r.zero() == 0);
  CHECK(r.one() == 1);
  CHECK(r.add(7, 8) == 3);
  CHECK(r.mul(4, 5) == 8);
  CHECK(r.neg(5) == 7);
  CHECK(r.sub(3, 5) == 10);
  CHECK(r.pow(2, 4) == 4);
}

TEST_CASE("GF(4) as Z2[x]/(x^2+x+1) is a field") {
  FiniteRing r = build_ring(RingSpec::quot_poly(2, {1, 1, 1}));
  CHECK(r.size() == 4);
  for (int a = 1; a < 4; ++a) {
    bool invertible = false;
    for (int b = 1; b < 4; ++b)
      if (r.mul(a, b) == r.one()) invertible = true;
    CHECK(invertible);
  }
}

TEST_CASE("products compute componentwise") {
  FiniteRing r = build_ring(RingSpec::product({RingSpec::zn(2), RingSpec::zn(3)}));
  CHECK(r.size() == 6);
  // (1,1) is the identity and generates everything additively (CRT: Z2 x Z3 = Z6)
  int x = r.one();
  int seen = 1;
  int cur = x;
  for (int i = 1; i < 6; ++i) {
    cur = r.add(cur, x);
    if (cur != r.zero()) ++seen;
  }
  CHECK(seen == 5);
  CHECK(r.name(r.one()) == "(1,1)");
}

TEST_CASE("tables rings are validated") {
  // Z2 given explicitly
  FiniteRing r = build_ring(RingSpec::tables(2, {0, 1, 1, 0}, {0, 0, 0, 1}, 0, 1));
  CHECK(r.add(1, 1) == 0);

  // broken associativity / identity must be rejected
  CHECK_THROWS_AS(build_ring(RingSpec::tables(2, {0, 1, 1, 0}, {0, 1, 1, 1}, 0, 1)),
                  AxiomViolation);
}

TEST_CASE("size caps") {
  Caps caps;
  caps.structured_max = 100;
  CHECK_THROWS_AS(build_ring(RingSpec::zn(101), caps), CapExceeded);
  CHECK_NOTHROW(build_ring(RingSpec::zn(100), caps));
}

TEST_CASE("regularity, root property, arithmetical") {
  CHECK(is_regular(build_ring(RingSpec::zn(6))));
  CHECK_FALSE(is_regular(build_ring(RingSpec::zn(4))));
  CHECK(is_regular(build_ring(RingSpec::quot_poly(2, {1, 1, 1}))));

  CHECK(has_root_property(build_ring(RingSpec::zn(2))));
  CHECK_FALSE(has_root_property(build_ring(RingSpec::zn(4))));  // 2 is no power

  CHECK(is_arithmetical(build_ring(RingSpec::zn(12))));
}
